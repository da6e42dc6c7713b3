#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamex/families.hpp"
#include "hamex/graph.hpp"
#include "hamex/hamilton.hpp"
#include "hamex/parameters.hpp"

namespace hamex {

// All 2^C(n,2) labeled graphs of order n in ascending edge-mask order,
// addressable by index (the index is the mask). n <= 8.
struct LabeledEnumeration {
  int n = 0;
  std::int64_t count = 0;
  Graph at(std::int64_t index) const;
};
LabeledEnumeration enumerate_labeled(int n);

// Newline-delimited graph6 records with a uniform order; parse errors and
// order mismatches are reported with their line number.
std::vector<Graph> ingest_graph6(const std::string& path);

struct SweepSource {
  enum class Kind { Exhaustive, Stream };
  Kind kind = Kind::Exhaustive;
  std::string path;  // stream only

  static SweepSource exhaustive() { return {Kind::Exhaustive, {}}; }
  static SweepSource stream(std::string p) { return {Kind::Stream, std::move(p)}; }
};

struct SweepSpec {
  int n = 0;
  int k = 1;
  HamProperty property = HamProperty::Cycle;
  ParameterId parameter;
  SweepSource source = SweepSource::exhaustive();
  double tol = kCmpTol;
};

struct SweepReport {
  SweepSpec spec;
  std::int64_t population_size = 0;
  std::int64_t candidates = 0;  // graphs passing the min-degree and property filters
  ParameterValue max_value{};   // meaningful only when candidates > 0
  std::vector<std::string> argmax;  // graph6, deduplicated up to isomorphism
  FamilyScan family;
  bool match = false;
  std::vector<std::string> counterexamples;  // candidates above family value + tol
  bool weak_mode = false;         // upper-bound semantics were used
  bool endpoint_attained = false;  // weak mode: family max sits at an s-range endpoint
};

struct SweepOptions {
  bool allow_large = false;   // permit exhaustive n = 8 (2^28 graphs)
  bool no_prefilter = false;  // disable the edge-count prefilter for spectral scans
  int jobs = 0;               // 0 = hardware concurrency
};

// Scans the population for graphs with min degree >= k that fail the
// property, maximizes the parameter over them, and compares against the
// family maximum: match means the values agree within tol and every argmax
// is isomorphic to a family member.
SweepReport verify_theorem(const SweepSpec& spec, const SweepOptions& opts = {});

// Edge-count special case. For n = 8 only the graphs with at least
// erdos_threshold(n, k) edges are examined (the only ones that can attain or
// exceed the threshold); the candidates field then counts examined
// candidates only.
SweepReport verify_erdos(int n, int k, const SweepOptions& opts = {});

// Clique-count bound: match means max_value <= family value + tol (an upper
// bound, not equality), and endpoint_attained reports whether the family
// maximum is attained at an end of the s-range.
SweepReport verify_weak_bound(const SweepSpec& spec, const SweepOptions& opts = {});

std::string to_json_string(const SweepReport& report);
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepReport& report);

}  // namespace hamex

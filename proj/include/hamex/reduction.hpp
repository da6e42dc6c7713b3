#pragma once

#include <array>
#include <string>
#include <vector>

#include "hamex/families.hpp"
#include "hamex/graph.hpp"
#include "hamex/hamilton.hpp"
#include "hamex/parameters.hpp"

namespace hamex {

// Which of the two reduction stages produced a step: stage 1 makes the
// low-degree set independent, stage 2 concentrates its neighborhoods.
enum class ReductionStage { Algo1, Algo2 };

std::string to_string(ReductionStage stage);  // "algo1" | "algo2"
ReductionStage reduction_stage_from_string(const std::string& text);

struct KelmansStep {
  int source = 0;
  int target = 0;
  ReductionStage stage = ReductionStage::Algo1;

  bool operator==(const KelmansStep&) const = default;
};

struct StageResult {
  Graph graph;
  std::vector<KelmansStep> steps;
};

// Stage 1. Applies Kelmans shifts until S is independent: scans pairs
// (S[i], S[j]), i < j, in ascending order; a present edge is broken by
// shifting S[i] toward the first T-vertex not adjacent to S[j]. Degrees of
// S-vertices never increase, and at most |S|^2 steps are emitted.
// Requires S and T to partition the vertices with |S| <= |T|. The shift
// target always exists when every S[j] (j >= 1) starts with at most |T|
// neighbors inside T + {S[0..j-1]}; a violation throws.
StageResult make_independent(const Graph& g, const std::vector<int>& S,
                             const std::vector<int>& T);

// Stage 2. Starting from a graph where S is independent, r is the maximum
// S-degree and the first S-vertex is adjacent to exactly T[0..r-1], shifts
// the far T-vertices (T[j], j >= r) toward non-adjacent near ones until
// every S-neighborhood lies inside T[0..r-1]. S stays independent and every
// S-degree is preserved; at most |S| * (|T| - r) steps are emitted.
StageResult concentrate_neighborhoods(const Graph& gamma, const std::vector<int>& S,
                                      const std::vector<int>& T, int r);

// The full pipeline's output: enough to replay both stages from scratch and
// re-derive every claim independently.
struct ReductionCertificate {
  HamProperty property = HamProperty::Cycle;
  int k = 0;            // minimum-degree bound the input satisfied
  int s = 0;            // deficiency index found for the failing property
  VertexSet members = 0;  // the deficiency set S
  // Role order: S as fed to stage 2 (maximum-degree member first), then T
  // (the stage-2 head slots first). gamma_star embeds into the host family
  // under this labeling.
  std::vector<int> relabeling;
  std::vector<KelmansStep> steps;  // stage-1 steps, then stage-2 steps
  Graph graph = Graph::empty(1);       // input G
  Graph gamma = Graph::empty(1);       // after stage 1
  Graph gamma_star = Graph::empty(1);  // after stage 2
  int r = 0;            // maximum S-degree in gamma
  FamilySpec host;      // family member gamma_star embeds into
  // Parameter values of graph, gamma, gamma_star, build_family(host);
  // non-decreasing within the comparison tolerance.
  std::array<ParameterValue, 4> chain{};
};

// Runs the pipeline on a graph that fails the property with min degree >= k:
// deficiency set -> stage 1 -> relabel -> stage 2 -> host family. Throws
// std::invalid_argument when the graph satisfies the property, has min
// degree < k, or k is out of range (connected mode needs k >= 2).
ReductionCertificate reduce(const Graph& g, HamProperty property, int k,
                            const ParameterId& p);

// Replays the steps from scratch and re-checks every certificate claim:
// stage outputs match, S independent, S-degrees preserved, neighborhoods
// inside the first r T-slots, gamma_star a subgraph of the host under the
// relabeling, chain consistent with a fresh evaluation and non-decreasing
// within tol. Returns false on any failure; never throws.
bool verify_certificate(const ReductionCertificate& cert, const ParameterId& p,
                        double tol = kCmpTol);

std::string to_json_string(const ReductionCertificate& cert);
ReductionCertificate reduction_certificate_from_json(const std::string& text);

}  // namespace hamex

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamex/graph.hpp"

namespace hamex {

// Comparison tolerance for real parameter values. Eigensolves run tighter
// (kEigenTol) so solver noise stays well below comparison granularity.
inline constexpr double kCmpTol = 1e-9;
inline constexpr double kEigenTol = 1e-10;
// Strict improvement margin for real parameters in P1 checks.
inline constexpr double kStrictMargin = 1e-10;

enum class ParameterKind {
  EdgeCount,
  CliqueCount,
  SpectralRadius,
  SignlessLaplacianRadius,
};

struct ParameterId {
  ParameterKind kind = ParameterKind::EdgeCount;
  int clique_k = 0;  // >= 2 iff kind == CliqueCount

  static ParameterId edge();
  static ParameterId clique(int k);
  static ParameterId rho();
  static ParameterId q();

  bool is_integer() const {
    return kind == ParameterKind::EdgeCount || kind == ParameterKind::CliqueCount;
  }
  // CLI/JSON token: "e" | "nk:<k>" | "rho" | "q"
  std::string token() const;
  static ParameterId from_token(const std::string& token);

  bool operator==(const ParameterId&) const = default;
};

// Exact integer for e and N_k, real for rho and q.
struct ParameterValue {
  bool exact = true;
  long long ivalue = 0;
  double rvalue = 0.0;

  static ParameterValue integer(long long v) { return {true, v, 0.0}; }
  static ParameterValue real(double v) { return {false, 0, v}; }
  double as_double() const { return exact ? static_cast<double>(ivalue) : rvalue; }
};

// Three-way comparison: exact for integers, tolerance band for reals.
int compare(const ParameterValue& a, const ParameterValue& b, double tol = kCmpTol);

long long edge_count(const Graph& g);
long long clique_count(const Graph& g, int k);  // k >= 1; k > n gives 0
double spectral_radius(const Graph& g, double tol = kEigenTol);
double signless_laplacian_radius(const Graph& g, double tol = kEigenTol);

ParameterValue evaluate(const ParameterId& p, const Graph& g, double tol = kEigenTol);

// Population for the axiom checker: graphs stored as (order, edge mask), so
// exhaustive populations stay compact.
struct GraphPopulation {
  struct Item {
    int n;
    std::uint64_t mask;
  };
  std::string description;
  std::vector<Item> items;

  static GraphPopulation connected_upto(int nmax);  // 1 <= nmax <= 7
  static GraphPopulation from_graphs(const std::string& description,
                                     const std::vector<Graph>& graphs);
};

struct FeasibilityCounterexample {
  std::string graph6;
  std::string operation;  // "add_edge(u,v)" or "kelmans(x,y)"
  std::string category;   // "p1_strict" | "p1_weak" | "p2"
  ParameterValue before;
  ParameterValue after;
};

struct FeasibilityReport {
  ParameterId parameter;
  std::string population;
  std::int64_t population_size = 0;
  bool strict = false;  // which P1 reading gates `holds()`
  double tol = kCmpTol;

  bool p1_strict_holds = true;
  bool p1_weak_holds = true;
  bool p2_holds = true;
  std::int64_t p1_pairs = 0;
  std::int64_t p2_pairs = 0;
  std::int64_t p1_strict_violations = 0;
  std::int64_t p1_weak_violations = 0;
  std::int64_t p2_violations = 0;

  // lexicographically first counterexamples per category, capped
  std::vector<FeasibilityCounterexample> counterexamples;
  bool counterexamples_capped = false;

  bool holds() const { return (strict ? p1_strict_holds : p1_weak_holds) && p2_holds; }
};

inline constexpr int kCounterexampleCap = 100;

// Tests (P1) on every non-adjacent pair (add the edge, value must rise:
// strictly by more than the margin under the strict reading, weakly within
// tol otherwise) and (P2) on every ordered pair (Kelmans shift, value must
// not drop by more than tol). Both P1 readings are always evaluated;
// strict_p1 only selects which one holds() reports.
FeasibilityReport check_feasibility(const ParameterId& p, const GraphPopulation& population,
                                    bool strict_p1, double tol = kCmpTol, int jobs = 0);

std::string to_json_string(const FeasibilityReport& report);

}  // namespace hamex

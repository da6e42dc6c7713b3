#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamex/graph.hpp"
#include "hamex/hamilton.hpp"
#include "hamex/parameters.hpp"

namespace hamex {

// One member of the extremal families: a join clique over an independent set
// plus a second clique. The property selects which of the three shapes is
// meant; s indexes the family.
struct FamilySpec {
  HamProperty property = HamProperty::Cycle;
  int n = 0;
  int s = 0;

  bool operator==(const FamilySpec&) const = default;
};

// Structurally legal s-range (inclusive) for the given property and order.
// cycle: [1, (n-1)/2], path: [2, n/2], connected: [1, n/2 - 1].
std::pair<int, int> family_index_range(HamProperty property, int n);

// Smallest s whose family has minimum degree >= k. The family minimum degree
// is s (cycle), s - 1 (path), s + 1 (connected).
int family_index_floor(HamProperty property, int k);

void validate(const FamilySpec& spec);  // throws std::invalid_argument

// Block sizes in vertex-layout order: join clique, independent set, big clique.
struct FamilyBlocks {
  int join = 0;
  int independent = 0;
  int big = 0;
};
FamilyBlocks family_blocks(const FamilySpec& spec);

Graph build_family(const FamilySpec& spec);

// Exact binomial coefficient; 0 <= n <= 62, k outside [0, n] gives 0.
long long binomial(int n, int k);

long long family_edge_count(const FamilySpec& spec);

// Number of k-cliques in a cycle-family member: C(n-s, k) + s*C(s, k-1).
// Cycle property only, k >= 2.
long long family_clique_count(const FamilySpec& spec, int k);

// Alternate closed form for the same quantity, s*C(s-1, k-1) + C(n-s, k).
// It disagrees with direct enumeration (e.g. 12 vs 14 at n=7, s=2, k=2), so
// family_clique_count is the authoritative one; this stays available so
// consumers of the family tables can see and flag the discrepancy.
long long family_clique_count_variant(const FamilySpec& spec, int k);

struct FamilyScan {
  int s_star = 0;
  ParameterValue value;
  std::vector<std::pair<int, ParameterValue>> per_s;  // ascending s
};

// Evaluates P on every family member whose minimum degree is at least k and
// returns the maximizer (ties broken toward smaller s) plus the full table.
// tol is the comparison tolerance for real-valued parameters.
FamilyScan family_max(const ParameterId& p, int n, int k, HamProperty property,
                      double tol = kCmpTol);

// Edge threshold that forces a Hamilton cycle at minimum degree k:
// max{ C(n-k,2) + k^2, C(n-h,2) + h^2 } with h = (n-1)/2. Requires
// 1 <= k <= (n-1)/2.
long long erdos_threshold(int n, int k);

// Spectral radius of a cycle-family member via its 3x3 equitable quotient,
// exact for every n (the full graph never has to be materialized).
double quotient_spectral_radius(int n, int s, double tol = kEigenTol);

// CSV serialization of a family_max table: property,n,k,s,parameter,value.
std::string family_table_csv(HamProperty property, int n, int k, const ParameterId& p,
                             const FamilyScan& scan);

}  // namespace hamex

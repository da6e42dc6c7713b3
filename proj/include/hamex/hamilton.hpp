#pragma once

#include <optional>
#include <string>

#include "hamex/graph.hpp"

namespace hamex {

enum class HamProperty { Cycle, Path, Connected };

std::string to_string(HamProperty p);                     // "cycle" | "path" | "hc"
HamProperty ham_property_from_string(const std::string&);

// Backtracking deciders. Search extends to the lowest-labeled unvisited
// neighbor first and prunes whenever the unvisited vertices are no longer
// reachable from the current endpoint, so results are deterministic and the
// intended scale (n <= 12) is comfortable.
bool has_hamilton_cycle(const Graph& g);      // n < 3 is false
bool has_hamilton_path(const Graph& g);       // n = 1 is true
bool is_hamilton_connected(const Graph& g);   // n = 1 true, n = 2 iff the edge is present

// Spanning u-v path (u != v).
bool has_spanning_path(const Graph& g, int u, int v);

bool satisfies(const Graph& g, HamProperty p);

// Iterated degree-sum closure: repeatedly add every non-edge whose endpoint
// degrees sum to at least t, to a fixed point. The fixed point is unique, so
// scan order does not matter.
Graph closure(const Graph& g, int t);

// A witness that a Hamiltonicity property fails: s together with a set of
// low-degree vertices.
//   cycle:     |members| = s, degrees <= s,     1 <= s <= (n-1)/2
//   path:      |members| = s, degrees <= s-1,   1 <= s <= n/2
//   connected: |members| = s-1, degrees <= s,   2 <= s <= n/2  (needs min degree >= 2)
struct DeficiencySet {
  int s = 0;
  int bound = 0;
  VertexSet members = 0;
};

// Smallest s whose witness set exists; members are the lowest-degree vertices
// (ties by label). Returns nullopt when no s in range works, which certifies
// that the property holds. Connected mode throws if min degree < 2.
std::optional<DeficiencySet> find_deficiency_set(const Graph& g, HamProperty mode);

}  // namespace hamex

#include "hamex/hamilton.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hamex {

std::string to_string(HamProperty p) {
  switch (p) {
    case HamProperty::Cycle: return "cycle";
    case HamProperty::Path: return "path";
    case HamProperty::Connected: return "hc";
  }
  throw std::logic_error("bad HamProperty");
}

HamProperty ham_property_from_string(const std::string& s) {
  if (s == "cycle") return HamProperty::Cycle;
  if (s == "path") return HamProperty::Path;
  if (s == "hc") return HamProperty::Connected;
  throw std::invalid_argument("unknown property '" + s + "' (cycle|path|hc)");
}

namespace {

// Path extension for a Hamilton cycle anchored at vertex 0.
bool cycle_dfs(const Graph& g, int cur, VertexSet visited) {
  VertexSet unvis = g.vertex_mask() & ~visited;
  if (unvis == 0) return g.adjacent(cur, 0);
  if (!reaches_all(g, cur, unvis, unvis)) return false;
  for (VertexSet cand = g.neighbor_mask(cur) & unvis; cand;) {
    int w = lowest_bit(cand);
    cand &= cand - 1;
    if (cycle_dfs(g, w, visited | bit(w))) return true;
  }
  return false;
}

// Spanning path extension with the far endpoint v reserved for the last step.
bool path_to_dfs(const Graph& g, int cur, int v, VertexSet visited) {
  VertexSet unvis = g.vertex_mask() & ~visited;
  if (unvis == 0) return cur == v;
  if (!reaches_all(g, cur, unvis, unvis)) return false;
  VertexSet cand = g.neighbor_mask(cur) & unvis;
  if (unvis != bit(v)) cand &= ~bit(v);
  for (; cand;) {
    int w = lowest_bit(cand);
    cand &= cand - 1;
    if (path_to_dfs(g, w, v, visited | bit(w))) return true;
  }
  return false;
}

// Spanning path extension with a free far endpoint.
bool path_dfs(const Graph& g, int cur, VertexSet visited) {
  VertexSet unvis = g.vertex_mask() & ~visited;
  if (unvis == 0) return true;
  if (!reaches_all(g, cur, unvis, unvis)) return false;
  for (VertexSet cand = g.neighbor_mask(cur) & unvis; cand;) {
    int w = lowest_bit(cand);
    cand &= cand - 1;
    if (path_dfs(g, w, visited | bit(w))) return true;
  }
  return false;
}

}  // namespace

bool has_hamilton_cycle(const Graph& g) {
  int n = g.order();
  if (n < 3) return false;
  if (g.min_degree() < 2) return false;
  if (!is_connected(g)) return false;
  return cycle_dfs(g, 0, bit(0));
}

bool has_hamilton_path(const Graph& g) {
  int n = g.order();
  if (n == 1) return true;
  if (!is_connected(g)) return false;
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) leaves.push_back(v);
  if (leaves.size() > 2) return false;
  if (!leaves.empty()) {
    // a degree-1 vertex can only be a path endpoint
    return path_dfs(g, leaves[0], bit(leaves[0]));
  }
  for (int v = 0; v < n; ++v)
    if (path_dfs(g, v, bit(v))) return true;
  return false;
}

bool has_spanning_path(const Graph& g, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::invalid_argument("spanning path needs two distinct vertices");
  if (!is_connected(g)) return false;
  return path_to_dfs(g, u, v, bit(u));
}

bool is_hamilton_connected(const Graph& g) {
  int n = g.order();
  if (n == 1) return true;
  if (n == 2) return g.adjacent(0, 1);
  if (!is_connected(g)) return false;
  // try likely failures first: pairs with small degree sum
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
    return g.degree(a.first) + g.degree(a.second) <
           g.degree(b.first) + g.degree(b.second);
  });
  for (auto [u, v] : pairs)
    if (!path_to_dfs(g, u, v, bit(u))) return false;
  return true;
}

bool satisfies(const Graph& g, HamProperty p) {
  switch (p) {
    case HamProperty::Cycle: return has_hamilton_cycle(g);
    case HamProperty::Path: return has_hamilton_path(g);
    case HamProperty::Connected: return is_hamilton_connected(g);
  }
  throw std::logic_error("bad HamProperty");
}

Graph closure(const Graph& g, int t) {
  Graph h = g;
  int n = h.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= t) {
          h = h.with_edge(u, v);
          changed = true;
        }
  }
  return h;
}

std::optional<DeficiencySet> find_deficiency_set(const Graph& g, HamProperty mode) {
  int n = g.order();
  int s_lo, s_hi, member_offset, degree_offset;
  switch (mode) {
    case HamProperty::Cycle:
      s_lo = 1; s_hi = (n - 1) / 2; member_offset = 0; degree_offset = 0;
      break;
    case HamProperty::Path:
      s_lo = 1; s_hi = n / 2; member_offset = 0; degree_offset = -1;
      break;
    case HamProperty::Connected:
      if (g.min_degree() < 2)
        throw std::invalid_argument("connected-mode witness needs min degree >= 2");
      s_lo = 2; s_hi = n / 2; member_offset = -1; degree_offset = 0;
      break;
    default:
      throw std::logic_error("bad HamProperty");
  }

  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });

  for (int s = s_lo; s <= s_hi; ++s) {
    int need = s + member_offset;     // witness size
    int bound = s + degree_offset;    // degree cap
    if (need < 1) continue;
    int have = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= bound) ++have;
    if (have < need) continue;
    DeficiencySet out;
    out.s = s;
    out.bound = bound;
    for (int i = 0; i < need; ++i) out.members |= bit(by_degree[i]);
    return out;
  }
  return std::nullopt;
}

}  // namespace hamex

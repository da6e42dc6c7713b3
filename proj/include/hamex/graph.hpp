#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamex {

// Vertices are 0-based ints. The order cap keeps every adjacency row (and
// every vertex subset) in one 64-bit word, and keeps graph6 in its
// single-byte short form.
inline constexpr int kMaxVertices = 62;

using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest_bit(VertexSet s) { return __builtin_ctzll(s); }  // s != 0
inline VertexSet bit(int v) { return VertexSet{1} << v; }

std::vector<int> set_to_vector(VertexSet s);

// Simple undirected graph, value semantics. Rows are kept symmetric and
// loop-free; every operation returns a new graph.
class Graph {
 public:
  static Graph empty(int n);
  static Graph complete(int n);
  static Graph build(int n, std::span<const std::pair<int, int>> edges);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  VertexSet vertex_mask() const { return (VertexSet{1} << n_) - 1; }

  // Adding an existing edge is a no-op; u == v is an error.
  Graph with_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  Graph() = default;
  void check_vertex(int v) const;
  void add_edge_unchecked(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};

  friend Graph join(const Graph&, const Graph&);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph kelmans(const Graph&, int, int);
  friend Graph graph_from_mask(int, std::uint64_t);
  friend Graph from_graph6(std::string_view);
  friend class GraphBuilder;
};

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// Kelmans operation: every neighbor of x that is neither y nor adjacent to y
// is detached from x and attached to y. Preserves the edge count.
Graph kelmans(const Graph& g, int x, int y);

bool is_connected(const Graph& g);

// True iff every vertex of `targets` is reachable from `src` by a walk that
// stays inside `allowed` (src itself need not be in `allowed`).
bool reaches_all(const Graph& g, int src, VertexSet allowed, VertexSet targets);

bool are_isomorphic(const Graph& g, const Graph& h);

// graph6, short form only (n <= 62). Encoding is bit-exact: byte n+63, then
// the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed into
// 6-bit groups, each +63, zero padding.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Bit index of the pair (i,j), i < j, in the same column order graph6 uses.
inline int pair_bit_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Graph on n vertices whose edge set is the given bitmask over pair indices.
// Requires n(n-1)/2 <= 64, i.e. the enumeration range n <= 11.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

}  // namespace hamex

#include "hamex/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamex {

std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = lowest_bit(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

static void check_order(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [1, 62], got " +
                                std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(n_));
}

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = g.vertex_mask() & ~bit(v);
  return g;
}

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.add_edge_unchecked(u, v);
  }
  return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.add_edge_unchecked(u, v);
  return g;
}

Graph join(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  int a = g.order(), b = h.order();
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) u.add_edge_unchecked(i, j);
  return u;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int a = g.order(), b = h.order();
  check_order(a + b);
  Graph u = Graph::empty(a + b);
  for (int v = 0; v < a; ++v) u.adj_[v] = g.adj_[v];
  for (int v = 0; v < b; ++v) u.adj_[a + v] = h.adj_[v] << a;
  return u;
}

Graph kelmans(const Graph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw std::invalid_argument("kelmans requires two distinct vertices");
  VertexSet moved = g.adj_[x] & ~g.adj_[y] & ~bit(y);
  Graph out = g;
  out.adj_[x] &= ~moved;
  out.adj_[y] |= moved;
  for (VertexSet s = moved; s;) {
    int z = lowest_bit(s);
    s &= s - 1;
    out.adj_[z] = (out.adj_[z] & ~bit(x)) | bit(y);
  }
  return out;
}

bool reaches_all(const Graph& g, int src, VertexSet allowed, VertexSet targets) {
  VertexSet seen = bit(src);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s;) {
      int v = lowest_bit(s);
      s &= s - 1;
      next |= g.neighbor_mask(v);
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return (targets & ~seen) == 0;
}

bool is_connected(const Graph& g) {
  return reaches_all(g, 0, g.vertex_mask(), g.vertex_mask());
}

namespace {

// Backtracking isomorphism search: vertices of g are assigned in order of
// descending degree (then label); candidates must match degree and adjacency
// to everything already assigned.
bool iso_extend(const Graph& g, const Graph& h, const std::vector<int>& order,
                std::size_t k, std::array<int, kMaxVertices>& map,
                VertexSet& used) {
  if (k == order.size()) return true;
  int v = order[k];
  for (int w = 0; w < h.order(); ++w) {
    if (used & bit(w)) continue;
    if (h.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      ok = g.adjacent(v, order[i]) == h.adjacent(w, map[order[i]]);
    if (!ok) continue;
    map[v] = w;
    used |= bit(w);
    if (iso_extend(g, h, order, k + 1, map, used)) return true;
    used &= ~bit(w);
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;

  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::array<int, kMaxVertices> map{};
  VertexSet used = 0;
  return iso_extend(g, h, order, 0, map, used);
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty record");
  int c0 = static_cast<unsigned char>(s[0]);
  if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
  if (c0 < 63 || c0 > 126) throw std::invalid_argument("graph6: bad leading byte");
  int n = c0 - 63;
  check_order(n);
  int nbits = n * (n - 1) / 2;
  std::size_t expect = 1 + (nbits + 5) / 6;
  if (s.size() != expect)
    throw std::invalid_argument("graph6: record length " + std::to_string(s.size()) +
                                ", expected " + std::to_string(expect));
  Graph g = Graph::empty(n);
  int idx = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    int c = static_cast<unsigned char>(s[p]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad data byte");
    int bits = c - 63;
    for (int b = 5; b >= 0 && idx < nbits; --b, ++idx) {
      if ((bits >> b) & 1) {
        // idx runs over pairs in column order; recover (i,j).
        int j = 1;
        while (pair_bit_index(0, j + 1) <= idx) ++j;
        int i = idx - pair_bit_index(0, j);
        g.add_edge_unchecked(i, j);
      }
    }
  }
  return g;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  check_order(n);
  int m = n * (n - 1) / 2;
  if (m > 64 || (m < 64 && (mask >> m) != 0))
    throw std::invalid_argument("edge mask out of range for order " + std::to_string(n));
  Graph g = Graph::empty(n);
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((mask >> idx) & 1) g.add_edge_unchecked(i, j);
  return g;
}

std::uint64_t mask_from_graph(const Graph& g) {
  int n = g.order();
  if (n * (n - 1) / 2 > 64) throw std::invalid_argument("order too large for an edge mask");
  std::uint64_t mask = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << pair_bit_index(i, j);
  return mask;
}

}  // namespace hamex

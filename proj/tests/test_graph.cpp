#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "hamex/graph.hpp"

using namespace hamex;

namespace {

Graph path_graph(int n) {
  Graph g = Graph::empty(n);
  for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  return path_graph(n).with_edge(n - 1, 0);
}

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g = Graph::empty(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) g = g.with_edge(i, j);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h = Graph::empty(g.order());
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) h = h.with_edge(perm[i], perm[j]);
  return h;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("build and accessors") {
  Graph k3 = Graph::complete(3);
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 2));
  CHECK(k3.degree(1) == 2);
  CHECK(k3.min_degree() == 2);

  Graph p4 = path_graph(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
  CHECK(!p4.adjacent(0, 3));

  // duplicate edges collapse
  Graph d = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(d.edge_count() == 1);

  CHECK(Graph::empty(1).edge_count() == 0);
  CHECK_THROWS_AS(Graph::empty(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph::empty(63), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::complete(4).with_edge(2, 2), std::invalid_argument);
}

TEST_CASE("join and disjoint union") {
  Graph k2 = Graph::complete(2);
  CHECK(join(Graph::complete(1), Graph::complete(1)) == k2);

  // wheel = C_4 joined with a hub
  Graph wheel = join(cycle_graph(4), Graph::complete(1));
  CHECK(wheel.order() == 5);
  CHECK(wheel.edge_count() == 8);
  CHECK(wheel.degree(4) == 4);

  Graph two_triangles = disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK(!two_triangles.adjacent(2, 3));
  CHECK(!is_connected(two_triangles));

  // K_2 + (2K_1 u K_3): 7 vertices, 1 + 3 + 2*5 = 14 edges
  Graph g = join(k2, disjoint_union(Graph::empty(2), Graph::complete(3)));
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 14);
  CHECK(g.degree(0) == 6);   // join side dominates
  CHECK(g.degree(2) == 2);   // independent vertex
  CHECK(g.degree(4) == 4);   // K_3 vertex

  CHECK_THROWS_AS(disjoint_union(Graph::complete(40), Graph::complete(30)),
                  std::invalid_argument);
}

TEST_CASE("kelmans examples") {
  // P_4 a-b-c-d, shift b's private neighbors to c: star centered at c
  Graph p4 = path_graph(4);
  Graph star = kelmans(p4, 1, 2);
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(2) == 3);
  CHECK(are_isomorphic(star, Graph::build(4, {{2, 0}, {2, 1}, {2, 3}})));

  // star center to leaf: isomorphic star around the leaf
  Graph k13 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  Graph moved = kelmans(k13, 0, 1);
  CHECK(moved.degree(1) == 3);
  CHECK(are_isomorphic(moved, k13));

  // no private neighbors: no change
  Graph p3 = path_graph(3);
  CHECK(kelmans(p3, 0, 2) == p3);

  CHECK_THROWS_AS(kelmans(p4, 2, 2), std::invalid_argument);
}

TEST_CASE("kelmans preserves edge count exhaustively (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Graph g = graph_from_mask(n, mask);
      int e = g.edge_count();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          Graph t = kelmans(g, x, y);
          REQUIRE(t.edge_count() == e);
          // rows stay symmetric and loop-free
          for (int v = 0; v < n; ++v) {
            REQUIRE(!t.adjacent(v, v));
            REQUIRE((t.neighbor_mask(v) & ~t.vertex_mask()) == 0);
          }
        }
    }
  }
}

TEST_CASE("graph6 frozen strings") {
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(Graph::complete(1)) == "@");
  CHECK(to_graph6(Graph::build(3, {{0, 1}, {1, 2}})) == "Bg");
  CHECK(from_graph6("Bw") == Graph::complete(3));
  CHECK(from_graph6("@") == Graph::complete(1));
  CHECK(from_graph6("Bg") == Graph::build(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("graph6 round trips") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> pick_n(1, 10);
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = random_graph(pick_n(rng), rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  // also the cap itself
  std::string big = to_graph6(Graph::complete(62));
  CHECK(from_graph6(big) == Graph::complete(62));
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("?"), std::invalid_argument);          // n = 0
  CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);        // long form
  CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);          // truncated
  CHECK_THROWS_AS(from_graph6("Bww"), std::invalid_argument);        // trailing bytes
  CHECK_THROWS_AS(from_graph6(std::string("B\x20", 2)), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6(std::string("B\x7f", 2)), std::invalid_argument);
}

TEST_CASE("edge mask enumeration order") {
  // bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2), bit 3 is (0,3), ...
  CHECK(pair_bit_index(0, 1) == 0);
  CHECK(pair_bit_index(0, 2) == 1);
  CHECK(pair_bit_index(1, 2) == 2);
  CHECK(pair_bit_index(0, 3) == 3);
  CHECK(graph_from_mask(4, 0) == Graph::empty(4));
  CHECK(graph_from_mask(4, 1) == Graph::build(4, {{0, 1}}));
  CHECK(graph_from_mask(4, 0b111111) == Graph::complete(4));
  for (std::uint64_t mask = 0; mask < 64; ++mask)
    CHECK(mask_from_graph(graph_from_mask(4, mask)) == mask);
  CHECK_THROWS_AS(graph_from_mask(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_mask(12, 0), std::invalid_argument);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Graph::complete(1)));
  CHECK(!is_connected(Graph::empty(2)));
  CHECK(is_connected(path_graph(6)));
  CHECK(!is_connected(disjoint_union(path_graph(2), path_graph(3))));
  Graph g = path_graph(5);
  CHECK(reaches_all(g, 0, g.vertex_mask(), g.vertex_mask()));
  CHECK(!reaches_all(g, 0, g.vertex_mask() & ~bit(2), bit(4)));
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(cycle_graph(4), Graph::build(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
  CHECK(!are_isomorphic(path_graph(4), Graph::build(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(!are_isomorphic(path_graph(4), path_graph(5)));
  CHECK(are_isomorphic(Graph::empty(1), Graph::empty(1)));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(7, rng);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(are_isomorphic(g, relabel(g, perm)));
  }
  // same degree sequence, different graphs: C_6 vs 2 triangles
  CHECK(!are_isomorphic(cycle_graph(6), disjoint_union(Graph::complete(3), Graph::complete(3))));
}

TEST_CASE("set helpers") {
  VertexSet s = bit(0) | bit(3) | bit(5);
  CHECK(popcount(s) == 3);
  CHECK(lowest_bit(s) == 0);
  CHECK(set_to_vector(s) == std::vector<int>{0, 3, 5});
}

}  // TEST_SUITE

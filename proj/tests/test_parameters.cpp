#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include <json.hpp>

#include "hamex/parameters.hpp"
#include "hamex/spectral.hpp"
#include "test_util.hpp"

using namespace hamex;
using namespace hamex::testutil;

namespace {

Graph joined(int c, int i, int r) {
  return join(Graph::complete(c), disjoint_union(Graph::empty(i), Graph::complete(r)));
}

}  // namespace

TEST_SUITE("parameters") {

TEST_CASE("edge count") {
  CHECK(edge_count(Graph::complete(4)) == 6);
  CHECK(edge_count(Graph::empty(5)) == 0);
  // K_2 v (2K_1 u K_3): 1 + 2*5 + 3 = 14
  CHECK(edge_count(joined(2, 2, 3)) == 14);
}

TEST_CASE("clique count oracles") {
  CHECK(clique_count(Graph::complete(4), 3) == 4);
  CHECK(clique_count(Graph::complete(5), 4) == 5);
  CHECK(clique_count(Graph::complete(5), 5) == 1);
  CHECK(clique_count(Graph::complete(5), 6) == 0);  // k > n
  CHECK(clique_count(Graph::empty(6), 2) == 0);
  CHECK(clique_count(petersen(), 3) == 0);  // girth 5
  CHECK(clique_count(cycle_graph(5), 2) == 5);

  // K_2 v (2K_1 u K_3): triangles use 2 join vertices + any other (1*5)
  // or 1 join vertex + an edge of K_3 (2*3) or lie inside K_3 (1).
  CHECK(clique_count(joined(2, 2, 3), 3) == 12);

  CHECK(clique_count(Graph::complete(3), 1) == 3);
  CHECK_THROWS_AS(clique_count(Graph::complete(3), 0), std::invalid_argument);
}

TEST_CASE("clique count at k=2 matches edge count") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 9), rng, 0.4);
    CHECK(clique_count(g, 2) == edge_count(g));
  }
}

TEST_CASE("adjacency spectral radius oracles") {
  CHECK(spectral_radius(Graph::complete(4)) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(spectral_radius(cycle_graph(6)) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(spectral_radius(path_graph(4)) ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
  CHECK(spectral_radius(complete_bipartite(1, 3)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(spectral_radius(petersen()) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(spectral_radius(Graph::complete(1)) == doctest::Approx(0.0));
}

TEST_CASE("signless laplacian radius oracles") {
  // K_n: q = 2n - 2. C_n: q = 4. Star K_{1,m}: q = m + 1.
  CHECK(signless_laplacian_radius(Graph::complete(4)) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(signless_laplacian_radius(cycle_graph(5)) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(signless_laplacian_radius(complete_bipartite(1, 3)) ==
        doctest::Approx(4.0).epsilon(1e-9));
  CHECK(signless_laplacian_radius(Graph::empty(3)) == doctest::Approx(0.0));
}

TEST_CASE("spectral envelope on random graphs") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 8), rng, 0.5);
    double rho = spectral_radius(g);
    double avg = 2.0 * g.edge_count() / g.order();
    CHECK(rho >= avg - 1e-8);
    CHECK(rho <= g.max_degree() + 1e-8);
    // q is sandwiched between 2 rho-style bounds: q >= 2e/n * 2 is false in
    // general, but q <= 2 * max degree always, and q >= rho + min degree.
    double q = signless_laplacian_radius(g);
    CHECK(q <= 2.0 * g.max_degree() + 1e-8);
    CHECK(q >= rho - 1e-8);
  }
}

TEST_CASE("regular graphs pin both radii") {
  // d-regular: rho = d and q = 2d.
  for (const Graph& g : {cycle_graph(7), petersen(), Graph::complete(6),
                         complete_bipartite(3, 3)}) {
    int d = g.max_degree();
    REQUIRE(g.min_degree() == d);
    CHECK(spectral_radius(g) == doctest::Approx(d).epsilon(1e-9));
    CHECK(signless_laplacian_radius(g) == doctest::Approx(2.0 * d).epsilon(1e-9));
  }
}

TEST_CASE("eigensolver rejects bad input") {
  CHECK_THROWS_AS(largest_symmetric_eigenvalue({1.0, 0.0, 0.0}, 2, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(largest_symmetric_eigenvalue({}, 0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(largest_symmetric_eigenvalue({1.0}, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(largest_symmetric_eigenvalue({1.0}, 1, -1e-10), std::invalid_argument);
  // Tolerance below representable spacing cannot terminate; must fail loudly.
  CHECK_THROWS_AS(spectral_radius(Graph::complete(5), 1e-300), std::runtime_error);
}

TEST_CASE("parameter id tokens") {
  CHECK(ParameterId::edge().token() == "e");
  CHECK(ParameterId::rho().token() == "rho");
  CHECK(ParameterId::q().token() == "q");
  CHECK(ParameterId::clique(3).token() == "nk:3");

  for (const char* t : {"e", "rho", "q", "nk:2", "nk:5"}) {
    ParameterId p = ParameterId::from_token(t);
    CHECK(p.token() == t);
  }
  CHECK(ParameterId::from_token("nk:3") == ParameterId::clique(3));

  CHECK_THROWS_AS(ParameterId::clique(1), std::invalid_argument);
  CHECK_THROWS_AS(ParameterId::from_token("nk:1"), std::invalid_argument);
  CHECK_THROWS_AS(ParameterId::from_token("nk:"), std::invalid_argument);
  CHECK_THROWS_AS(ParameterId::from_token("nk:3x"), std::invalid_argument);
  CHECK_THROWS_AS(ParameterId::from_token("edges"), std::invalid_argument);
  CHECK_THROWS_AS(ParameterId::from_token(""), std::invalid_argument);
}

TEST_CASE("value comparison semantics") {
  auto I = ParameterValue::integer;
  auto R = ParameterValue::real;
  CHECK(compare(I(3), I(3)) == 0);
  CHECK(compare(I(2), I(3)) == -1);
  CHECK(compare(I(4), I(3)) == 1);
  // Integers compare exactly: a difference of 1 is never absorbed by tol.
  CHECK(compare(I(3), I(4), 10.0) == -1);

  CHECK(compare(R(1.0), R(1.0 + 5e-10)) == 0);
  CHECK(compare(R(1.0), R(1.0 + 5e-9)) == -1);
  CHECK(compare(R(1.0 + 5e-9), R(1.0)) == 1);
  // Mixed exactness falls back to the tolerance band.
  CHECK(compare(I(2), R(2.0 + 5e-10)) == 0);
  CHECK(compare(I(2), R(2.5)) == -1);
}

TEST_CASE("evaluate dispatches per parameter") {
  Graph g = joined(2, 2, 3);
  ParameterValue e = evaluate(ParameterId::edge(), g);
  REQUIRE(e.exact);
  CHECK(e.ivalue == 14);
  ParameterValue n3 = evaluate(ParameterId::clique(3), g);
  REQUIRE(n3.exact);
  CHECK(n3.ivalue == 12);
  ParameterValue r = evaluate(ParameterId::rho(), Graph::complete(4));
  REQUIRE(!r.exact);
  CHECK(r.rvalue == doctest::Approx(3.0).epsilon(1e-9));
  ParameterValue q = evaluate(ParameterId::q(), Graph::complete(4));
  REQUIRE(!q.exact);
  CHECK(q.rvalue == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("connected population sizes") {
  GraphPopulation p4 = GraphPopulation::connected_upto(4);
  CHECK(p4.items.size() == 1 + 1 + 4 + 38);
  GraphPopulation p5 = GraphPopulation::connected_upto(5);
  CHECK(p5.items.size() == 44 + 728);
  CHECK_THROWS_AS(GraphPopulation::connected_upto(0), std::invalid_argument);
  CHECK_THROWS_AS(GraphPopulation::connected_upto(8), std::invalid_argument);

  GraphPopulation fixed = GraphPopulation::from_graphs("two graphs",
                                                       {Graph::complete(3), path_graph(4)});
  REQUIRE(fixed.items.size() == 2);
  CHECK(graph_from_mask(fixed.items[1].n, fixed.items[1].mask) == path_graph(4));
}

TEST_CASE("edge count is strictly feasible on small connected graphs") {
  FeasibilityReport r =
      check_feasibility(ParameterId::edge(), GraphPopulation::connected_upto(4), true);
  CHECK(r.p1_strict_holds);
  CHECK(r.p1_weak_holds);
  CHECK(r.p2_holds);
  CHECK(r.holds());
  CHECK(r.counterexamples.empty());
  CHECK(!r.counterexamples_capped);
  CHECK(r.p1_pairs > 0);
  CHECK(r.p2_pairs > 0);
  CHECK(r.population_size == 44);
}

TEST_CASE("both radii are strictly feasible on small connected graphs") {
  GraphPopulation pop = GraphPopulation::connected_upto(4);
  for (ParameterId p : {ParameterId::rho(), ParameterId::q()}) {
    FeasibilityReport r = check_feasibility(p, pop, true);
    CHECK(r.p1_strict_holds);
    CHECK(r.p2_holds);
    CHECK(r.holds());
  }
}

TEST_CASE("triangle count is weakly but not strictly feasible") {
  FeasibilityReport r = check_feasibility(ParameterId::clique(3),
                                          GraphPopulation::connected_upto(5), true);
  CHECK(!r.p1_strict_holds);
  CHECK(r.p1_weak_holds);
  CHECK(r.p2_holds);
  CHECK(!r.holds());  // strict reading gates holds()
  CHECK(r.p1_strict_violations > 0);
  REQUIRE(!r.counterexamples.empty());

  // Closing a 4-path into a 4-cycle adds no triangle: the canonical witness.
  bool found_path_witness = false;
  for (const auto& c : r.counterexamples) {
    CHECK(c.category == "p1_strict");
    CHECK(c.before.exact);
    if (c.before.ivalue == 0 && c.after.ivalue == 0 &&
        are_isomorphic(from_graph6(c.graph6), path_graph(4)))
      found_path_witness = true;
  }
  CHECK(found_path_witness);

  // Reported counterexamples are sorted by graph6 record.
  for (std::size_t i = 1; i < r.counterexamples.size(); ++i)
    CHECK(r.counterexamples[i - 1].graph6 <= r.counterexamples[i].graph6);

  // The weak reading accepts the same evidence.
  FeasibilityReport weak = check_feasibility(ParameterId::clique(3),
                                             GraphPopulation::connected_upto(5), false);
  CHECK(weak.holds());
}

TEST_CASE("feasibility report json is stable across job counts") {
  GraphPopulation pop = GraphPopulation::connected_upto(5);
  FeasibilityReport serial = check_feasibility(ParameterId::clique(3), pop, true, kCmpTol, 1);
  FeasibilityReport parallel = check_feasibility(ParameterId::clique(3), pop, true, kCmpTol, 4);
  CHECK(to_json_string(serial) == to_json_string(parallel));

  nlohmann::json j = nlohmann::json::parse(to_json_string(serial));
  CHECK(j["parameter"] == "nk:3");
  CHECK(j["population_size"] == static_cast<std::int64_t>(pop.items.size()));
  CHECK(j["strict"] == true);
  CHECK(j["p1_strict_holds"] == false);
  CHECK(j["p1_weak_holds"] == true);
  CHECK(j["p2_holds"] == true);
  CHECK(j["tested"]["p1_pairs"] == serial.p1_pairs);
  CHECK(j["violations"]["p1_strict"] == serial.p1_strict_violations);
  CHECK(j["counterexamples"].size() == serial.counterexamples.size());
  CHECK(j["counterexamples_capped"] == serial.counterexamples_capped);
  CHECK(j["counterexamples"][0]["operation"].get<std::string>().rfind("add_edge", 0) == 0);
}

TEST_CASE("feasibility rejects an empty population") {
  GraphPopulation empty;
  empty.description = "nothing";
  CHECK_THROWS_AS(check_feasibility(ParameterId::edge(), empty, true), std::invalid_argument);
}

TEST_CASE("random graphs never lose value under either operation") {
  // Edge addition and the Kelmans shift both transport every tracked
  // parameter monotonically; this is the backbone the reduction chain
  // argument rests on, so hammer it with random graphs.
  std::mt19937 rng(20240817);
  std::vector<ParameterId> params = {ParameterId::edge(), ParameterId::clique(3),
                                     ParameterId::rho(), ParameterId::q()};
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng, 0.5);

    int x = static_cast<int>(rng() % n);
    int y = static_cast<int>(rng() % n);
    if (x == y) y = (y + 1) % n;
    Graph shifted = kelmans(g, x, y);
    CHECK(shifted.edge_count() == g.edge_count());

    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) missing.push_back({u, v});

    for (const ParameterId& p : params) {
      ParameterValue base = evaluate(p, g);
      CHECK(compare(evaluate(p, shifted), base) >= 0);
      if (!missing.empty()) {
        auto [u, v] = missing[rng() % missing.size()];
        CHECK(compare(evaluate(p, g.with_edge(u, v)), base) >= 0);
      }
    }
  }
}

}  // TEST_SUITE

#include "hamex/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hamex/parallel.hpp"
#include "hamex/spectral.hpp"

namespace hamex {

ParameterId ParameterId::edge() { return {ParameterKind::EdgeCount, 0}; }

ParameterId ParameterId::clique(int k) {
  if (k < 2) throw std::invalid_argument("clique parameter needs k >= 2");
  return {ParameterKind::CliqueCount, k};
}

ParameterId ParameterId::rho() { return {ParameterKind::SpectralRadius, 0}; }
ParameterId ParameterId::q() { return {ParameterKind::SignlessLaplacianRadius, 0}; }

std::string ParameterId::token() const {
  switch (kind) {
    case ParameterKind::EdgeCount: return "e";
    case ParameterKind::CliqueCount: return "nk:" + std::to_string(clique_k);
    case ParameterKind::SpectralRadius: return "rho";
    case ParameterKind::SignlessLaplacianRadius: return "q";
  }
  throw std::logic_error("bad ParameterKind");
}

ParameterId ParameterId::from_token(const std::string& token) {
  if (token == "e") return edge();
  if (token == "rho") return rho();
  if (token == "q") return q();
  if (token.rfind("nk:", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(token.substr(3), &used);
      if (used != token.size() - 3) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad clique parameter token '" + token + "'");
    }
    return clique(k);
  }
  throw std::invalid_argument("unknown parameter '" + token + "' (e|nk:<k>|rho|q)");
}

int compare(const ParameterValue& a, const ParameterValue& b, double tol) {
  if (a.exact && b.exact) {
    if (a.ivalue < b.ivalue) return -1;
    return a.ivalue > b.ivalue ? 1 : 0;
  }
  double x = a.as_double(), y = b.as_double();
  if (x < y - tol) return -1;
  return x > y + tol ? 1 : 0;
}

long long edge_count(const Graph& g) { return g.edge_count(); }

namespace {

long long clique_rec(const Graph& g, VertexSet cand, int need) {
  if (need == 1) return popcount(cand);
  long long total = 0;
  while (cand) {
    int v = lowest_bit(cand);
    cand &= cand - 1;
    if (popcount(cand) < need - 1) break;
    total += clique_rec(g, g.neighbor_mask(v) & cand, need - 1);
  }
  return total;
}

std::vector<double> dense_matrix(const Graph& g, bool add_degrees) {
  int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (VertexSet s = g.neighbor_mask(u); s;) {
      int v = lowest_bit(s);
      s &= s - 1;
      a[static_cast<std::size_t>(u) * n + v] = 1.0;
    }
    if (add_degrees) a[static_cast<std::size_t>(u) * n + u] = g.degree(u);
  }
  return a;
}

}  // namespace

long long clique_count(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be at least 1");
  if (k > g.order()) return 0;
  if (k == 1) return g.order();
  return clique_rec(g, g.vertex_mask(), k);
}

double spectral_radius(const Graph& g, double tol) {
  double v = largest_symmetric_eigenvalue(dense_matrix(g, false), g.order(), tol);
  return std::max(v, 0.0);  // the exact value is never negative
}

double signless_laplacian_radius(const Graph& g, double tol) {
  double v = largest_symmetric_eigenvalue(dense_matrix(g, true), g.order(), tol);
  return std::max(v, 0.0);
}

ParameterValue evaluate(const ParameterId& p, const Graph& g, double tol) {
  switch (p.kind) {
    case ParameterKind::EdgeCount:
      return ParameterValue::integer(edge_count(g));
    case ParameterKind::CliqueCount:
      return ParameterValue::integer(clique_count(g, p.clique_k));
    case ParameterKind::SpectralRadius:
      return ParameterValue::real(spectral_radius(g, tol));
    case ParameterKind::SignlessLaplacianRadius:
      return ParameterValue::real(signless_laplacian_radius(g, tol));
  }
  throw std::logic_error("bad ParameterKind");
}

GraphPopulation GraphPopulation::connected_upto(int nmax) {
  if (nmax < 1 || nmax > 7)
    throw std::invalid_argument("exhaustive connected population supports nmax in [1, 7]");
  GraphPopulation pop;
  pop.description = "connected graphs n <= " + std::to_string(nmax) + " (labeled)";
  for (int n = 1; n <= nmax; ++n) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
      if (is_connected(graph_from_mask(n, mask))) pop.items.push_back({n, mask});
  }
  return pop;
}

GraphPopulation GraphPopulation::from_graphs(const std::string& description,
                                             const std::vector<Graph>& graphs) {
  GraphPopulation pop;
  pop.description = description;
  for (const Graph& g : graphs) pop.items.push_back({g.order(), mask_from_graph(g)});
  return pop;
}

namespace {

struct FeasibilityState {
  std::int64_t p1_pairs = 0, p2_pairs = 0;
  std::int64_t p1_strict = 0, p1_weak = 0, p2 = 0;
  // All counterexamples are kept until the final merge so the reported
  // (lexicographically first) ones do not depend on the job count. The
  // populations this runs on are small enough for that to stay cheap.
  std::vector<FeasibilityCounterexample> examples;

  void note(const std::string& g6, std::string op, const char* category,
            const ParameterValue& before, const ParameterValue& after) {
    examples.push_back({g6, std::move(op), category, before, after});
  }
};

bool sorts_before(const FeasibilityCounterexample& a, const FeasibilityCounterexample& b) {
  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
  if (a.category != b.category) return a.category < b.category;
  return a.operation < b.operation;
}

}  // namespace

FeasibilityReport check_feasibility(const ParameterId& p, const GraphPopulation& population,
                                    bool strict_p1, double tol, int jobs) {
  if (population.items.empty()) throw std::invalid_argument("feasibility population is empty");

  auto states = run_strided<FeasibilityState>(
      static_cast<std::int64_t>(population.items.size()), jobs,
      [&](FeasibilityState& st, std::int64_t idx) {
        const auto& item = population.items[idx];
        Graph g = graph_from_mask(item.n, item.mask);
        int n = g.order();
        ParameterValue base = evaluate(p, g);
        std::string g6;  // filled lazily, most graphs produce no counterexample
        auto graph6 = [&]() -> const std::string& {
          if (g6.empty()) g6 = to_graph6(g);
          return g6;
        };

        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            ++st.p1_pairs;
            ParameterValue after = evaluate(p, g.with_edge(u, v));
            bool strict_ok = p.is_integer() ? after.ivalue > base.ivalue
                                            : after.rvalue - base.rvalue > kStrictMargin;
            bool weak_ok = compare(after, base, tol) >= 0;
            std::string op;
            if (!strict_ok || !weak_ok)
              op = "add_edge(" + std::to_string(u) + "," + std::to_string(v) + ")";
            if (!strict_ok) {
              ++st.p1_strict;
              st.note(graph6(), op, "p1_strict", base, after);
            }
            if (!weak_ok) {
              ++st.p1_weak;
              st.note(graph6(), op, "p1_weak", base, after);
            }
          }

        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            ++st.p2_pairs;
            ParameterValue after = evaluate(p, kelmans(g, x, y));
            if (compare(after, base, tol) < 0) {
              ++st.p2;
              st.note(graph6(),
                      "kelmans(" + std::to_string(x) + "," + std::to_string(y) + ")",
                      "p2", base, after);
            }
          }
      });

  FeasibilityReport report;
  report.parameter = p;
  report.population = population.description;
  report.population_size = static_cast<std::int64_t>(population.items.size());
  report.strict = strict_p1;
  report.tol = tol;

  std::vector<FeasibilityCounterexample> all;
  for (const auto& st : states) {
    report.p1_pairs += st.p1_pairs;
    report.p2_pairs += st.p2_pairs;
    report.p1_strict_violations += st.p1_strict;
    report.p1_weak_violations += st.p1_weak;
    report.p2_violations += st.p2;
    all.insert(all.end(), st.examples.begin(), st.examples.end());
  }
  report.p1_strict_holds = report.p1_strict_violations == 0;
  report.p1_weak_holds = report.p1_weak_violations == 0;
  report.p2_holds = report.p2_violations == 0;

  std::sort(all.begin(), all.end(), sorts_before);
  if (all.size() > static_cast<std::size_t>(kCounterexampleCap)) {
    all.resize(kCounterexampleCap);
    report.counterexamples_capped = true;
  }
  report.counterexamples = std::move(all);
  return report;
}

std::string to_json_string(const FeasibilityReport& r) {
  nlohmann::ordered_json j;
  j["parameter"] = r.parameter.token();
  j["population"] = r.population;
  j["population_size"] = r.population_size;
  j["strict"] = r.strict;
  j["tol"] = r.tol;
  j["p1_strict_holds"] = r.p1_strict_holds;
  j["p1_weak_holds"] = r.p1_weak_holds;
  j["p2_holds"] = r.p2_holds;
  j["tested"] = {{"p1_pairs", r.p1_pairs}, {"p2_pairs", r.p2_pairs}};
  j["violations"] = {{"p1_strict", r.p1_strict_violations},
                     {"p1_weak", r.p1_weak_violations},
                     {"p2", r.p2_violations}};
  auto& arr = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) {
    nlohmann::ordered_json e;
    e["graph6"] = c.graph6;
    e["operation"] = c.operation;
    e["category"] = c.category;
    if (c.before.exact) {
      e["before"] = c.before.ivalue;
      e["after"] = c.after.ivalue;
    } else {
      e["before"] = c.before.rvalue;
      e["after"] = c.after.rvalue;
    }
    arr.push_back(std::move(e));
  }
  j["counterexamples_capped"] = r.counterexamples_capped;
  return j.dump(2);
}

}  // namespace hamex

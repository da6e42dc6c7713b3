#include "hamex/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace hamex {

std::string to_string(ReductionStage stage) {
  return stage == ReductionStage::Algo1 ? "algo1" : "algo2";
}

ReductionStage reduction_stage_from_string(const std::string& text) {
  if (text == "algo1") return ReductionStage::Algo1;
  if (text == "algo2") return ReductionStage::Algo2;
  throw std::invalid_argument("unknown reduction stage '" + text + "'");
}

namespace {

void check_partition(const Graph& g, const std::vector<int>& S, const std::vector<int>& T) {
  int n = g.order();
  if (static_cast<int>(S.size() + T.size()) != n)
    throw std::invalid_argument("S and T must partition the vertex set");
  VertexSet seen = 0;
  for (const std::vector<int>* part : {&S, &T})
    for (int v : *part) {
      if (v < 0 || v >= n || (seen >> v & 1))
        throw std::invalid_argument("S and T must partition the vertex set");
      seen |= bit(v);
    }
}

}  // namespace

StageResult make_independent(const Graph& g, const std::vector<int>& S,
                             const std::vector<int>& T) {
  check_partition(g, S, T);
  if (S.size() > T.size()) throw std::invalid_argument("need |S| <= |T|");

  StageResult out{g, {}};
  int s = static_cast<int>(S.size());
  int m = static_cast<int>(T.size());
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (!out.graph.adjacent(S[i], S[j])) continue;
      int t = 0;
      while (t < m && out.graph.adjacent(S[j], T[t])) ++t;
      if (t == m)
        throw std::invalid_argument(
            "shift target unavailable: a set vertex is adjacent to all of T");
      out.graph = kelmans(out.graph, S[i], T[t]);
      out.steps.push_back({S[i], T[t], ReductionStage::Algo1});
    }
  return out;
}

StageResult concentrate_neighborhoods(const Graph& gamma, const std::vector<int>& S,
                                      const std::vector<int>& T, int r) {
  check_partition(gamma, S, T);
  if (S.empty()) throw std::invalid_argument("S must be non-empty");
  int m = static_cast<int>(T.size());
  if (r < 0 || r > m) throw std::invalid_argument("r out of range");

  VertexSet smask = 0;
  int rmax = 0;
  for (int u : S) {
    smask |= bit(u);
    rmax = std::max(rmax, gamma.degree(u));
  }
  for (int u : S)
    if (gamma.neighbor_mask(u) & smask)
      throw std::invalid_argument("S must be independent");
  if (rmax != r) throw std::invalid_argument("r must be the maximum degree over S");

  VertexSet head = 0;
  for (int t = 0; t < r; ++t) head |= bit(T[t]);
  if (gamma.neighbor_mask(S[0]) != head)
    throw std::invalid_argument("the first S-vertex must be adjacent to exactly T[0..r-1]");

  StageResult out{gamma, {}};
  for (int u : S)
    for (int j = r; j < m; ++j) {
      if (!out.graph.adjacent(u, T[j])) continue;
      int t = 0;
      while (t < r && out.graph.adjacent(u, T[t])) ++t;
      if (t == r)
        throw std::invalid_argument(
            "shift target unavailable: a set vertex fills its whole head range");
      out.graph = kelmans(out.graph, T[j], T[t]);
      out.steps.push_back({T[j], T[t], ReductionStage::Algo2});
    }
  return out;
}

ReductionCertificate reduce(const Graph& g, HamProperty property, int k,
                            const ParameterId& p) {
  int n = g.order();
  if (k < 1) throw std::invalid_argument("minimum-degree bound must be at least 1");
  if (property == HamProperty::Connected && k < 2)
    throw std::invalid_argument("connected reduction needs k >= 2");
  if (g.min_degree() < k)
    throw std::invalid_argument("graph has minimum degree below k");
  if (satisfies(g, property))
    throw std::invalid_argument("graph satisfies the property; nothing to reduce");

  auto ds = find_deficiency_set(g, property);
  if (!ds)
    throw std::runtime_error("deficiency witness missing for a property-failing graph");

  // S in finder order (ascending degree, ties by label), T by ascending label.
  std::vector<int> S = set_to_vector(ds->members);
  std::stable_sort(S.begin(), S.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  std::vector<int> T;
  for (int v = 0; v < n; ++v)
    if (!(ds->members >> v & 1)) T.push_back(v);

  StageResult stage1 = make_independent(g, S, T);

  // Put a maximum-degree member of S first (ties toward the smaller label),
  // the rest by label; T starts with the first member's neighborhood.
  int u1 = -1;
  for (int u : set_to_vector(ds->members))
    if (u1 < 0 || stage1.graph.degree(u) > stage1.graph.degree(u1)) u1 = u;
  int r = stage1.graph.degree(u1);

  std::vector<int> S2{u1};
  for (int u : set_to_vector(ds->members))
    if (u != u1) S2.push_back(u);
  std::vector<int> T2 = set_to_vector(stage1.graph.neighbor_mask(u1));
  for (int v : T)
    if (!(stage1.graph.neighbor_mask(u1) >> v & 1)) T2.push_back(v);

  StageResult stage2 = concentrate_neighborhoods(stage1.graph, S2, T2, r);

  ReductionCertificate cert;
  cert.property = property;
  cert.k = k;
  cert.s = ds->s;
  cert.members = ds->members;
  cert.relabeling = std::move(S2);
  cert.relabeling.insert(cert.relabeling.end(), T2.begin(), T2.end());
  cert.steps = std::move(stage1.steps);
  cert.steps.insert(cert.steps.end(), stage2.steps.begin(), stage2.steps.end());
  cert.graph = g;
  cert.gamma = stage1.graph;
  cert.gamma_star = stage2.graph;
  cert.r = r;
  cert.host = {property, n, property == HamProperty::Connected ? ds->s - 1 : ds->s};
  cert.chain = {evaluate(p, g), evaluate(p, cert.gamma), evaluate(p, cert.gamma_star),
                evaluate(p, build_family(cert.host))};

  if (!verify_certificate(cert, p))
    throw std::runtime_error("reduction certificate failed its self-check");
  return cert;
}

bool verify_certificate(const ReductionCertificate& cert, const ParameterId& p,
                        double tol) {
  try {
    const Graph& g = cert.graph;
    int n = g.order();
    if (cert.gamma.order() != n || cert.gamma_star.order() != n) return false;
    if (cert.host.property != cert.property || cert.host.n != n) return false;
    int ssize = popcount(cert.members);
    int expected =
        cert.property == HamProperty::Connected ? cert.s - 1 : cert.s;
    if (ssize != expected || ssize < 1) return false;
    if (cert.host.s != expected) return false;
    if (cert.k < 1 || g.min_degree() < cert.k) return false;
    if (cert.members & ~g.vertex_mask()) return false;

    // relabeling: a permutation whose head is exactly S
    if (static_cast<int>(cert.relabeling.size()) != n) return false;
    VertexSet seen = 0;
    for (int v : cert.relabeling) {
      if (v < 0 || v >= n || (seen >> v & 1)) return false;
      seen |= bit(v);
    }
    VertexSet head = 0;
    for (int i = 0; i < ssize; ++i) head |= bit(cert.relabeling[i]);
    if (head != cert.members) return false;

    // replay both stages; stage-1 steps must all precede stage-2 steps
    Graph cur = g;
    std::size_t idx = 0;
    for (; idx < cert.steps.size() && cert.steps[idx].stage == ReductionStage::Algo1;
         ++idx)
      cur = kelmans(cur, cert.steps[idx].source, cert.steps[idx].target);
    if (cur != cert.gamma) return false;
    for (; idx < cert.steps.size(); ++idx) {
      if (cert.steps[idx].stage != ReductionStage::Algo2) return false;
      cur = kelmans(cur, cert.steps[idx].source, cert.steps[idx].target);
    }
    if (cur != cert.gamma_star) return false;

    // independence, degree preservation, the maximum degree r, containment
    // of every neighborhood in the first r T-slots
    int rmax = 0;
    for (int u : set_to_vector(cert.members)) {
      if (cert.gamma.neighbor_mask(u) & cert.members) return false;
      if (cert.gamma_star.neighbor_mask(u) & cert.members) return false;
      if (cert.gamma_star.degree(u) != cert.gamma.degree(u)) return false;
      rmax = std::max(rmax, cert.gamma.degree(u));
    }
    if (cert.r != rmax || cert.r > n - ssize) return false;
    VertexSet near = 0;
    for (int t = 0; t < cert.r; ++t) near |= bit(cert.relabeling[ssize + t]);
    for (int u : set_to_vector(cert.members))
      if (cert.gamma_star.neighbor_mask(u) & ~near) return false;

    // gamma_star must embed into the host family under the relabeling:
    // S fills the independent block, the first T-slots the join block, the
    // remaining T-slots the big clique.
    Graph host_graph = build_family(cert.host);
    FamilyBlocks blocks = family_blocks(cert.host);
    if (blocks.independent != ssize || cert.r > blocks.join) return false;
    std::vector<int> hpos(n);
    for (int role = 0; role < n; ++role) {
      int h;
      if (role < ssize) {
        h = blocks.join + role;
      } else {
        int t = role - ssize;
        h = t < blocks.join ? t : ssize + t;
      }
      hpos[cert.relabeling[role]] = h;
    }
    for (int u = 0; u < n; ++u)
      for (VertexSet m = cert.gamma_star.neighbor_mask(u); m;) {
        int v = lowest_bit(m);
        m &= m - 1;
        if (u < v && !host_graph.adjacent(hpos[u], hpos[v])) return false;
      }

    // the chain must match a fresh evaluation and never decrease
    std::array<ParameterValue, 4> fresh = {
        evaluate(p, g), evaluate(p, cert.gamma), evaluate(p, cert.gamma_star),
        evaluate(p, host_graph)};
    for (int i = 0; i < 4; ++i)
      if (compare(cert.chain[i], fresh[i], tol) != 0) return false;
    for (int i = 0; i + 1 < 4; ++i)
      if (compare(cert.chain[i], cert.chain[i + 1], tol) > 0) return false;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string to_json_string(const ReductionCertificate& cert) {
  nlohmann::ordered_json j;
  j["property"] = to_string(cert.property);
  j["k"] = cert.k;
  j["s"] = cert.s;
  j["S"] = set_to_vector(cert.members);
  j["relabeling"] = cert.relabeling;
  auto& steps = j["steps"] = nlohmann::ordered_json::array();
  for (const KelmansStep& step : cert.steps)
    steps.push_back({{"source", step.source},
                     {"target", step.target},
                     {"stage", to_string(step.stage)}});
  j["graph"] = to_graph6(cert.graph);
  j["gamma"] = to_graph6(cert.gamma);
  j["gamma_star"] = to_graph6(cert.gamma_star);
  j["host"] = {{"property", to_string(cert.host.property)},
               {"n", cert.host.n},
               {"s", cert.host.s}};
  auto& chain = j["chain"] = nlohmann::ordered_json::array();
  for (const ParameterValue& v : cert.chain) {
    if (v.exact)
      chain.push_back(v.ivalue);
    else
      chain.push_back(v.rvalue);
  }
  return j.dump(2);
}

ReductionCertificate reduction_certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ReductionCertificate cert;
  cert.property = ham_property_from_string(j.at("property").get<std::string>());
  cert.k = j.at("k").get<int>();
  cert.s = j.at("s").get<int>();
  cert.members = 0;
  for (int v : j.at("S").get<std::vector<int>>()) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex label out of range");
    cert.members |= bit(v);
  }
  cert.relabeling = j.at("relabeling").get<std::vector<int>>();
  for (const auto& step : j.at("steps"))
    cert.steps.push_back({step.at("source").get<int>(), step.at("target").get<int>(),
                          reduction_stage_from_string(step.at("stage").get<std::string>())});
  cert.graph = from_graph6(j.at("graph").get<std::string>());
  cert.gamma = from_graph6(j.at("gamma").get<std::string>());
  cert.gamma_star = from_graph6(j.at("gamma_star").get<std::string>());
  cert.host = {ham_property_from_string(j.at("host").at("property").get<std::string>()),
               j.at("host").at("n").get<int>(), j.at("host").at("s").get<int>()};
  const auto& chain = j.at("chain");
  if (chain.size() != 4) throw std::invalid_argument("chain must have four entries");
  for (int i = 0; i < 4; ++i)
    cert.chain[i] = chain[i].is_number_integer()
                        ? ParameterValue::integer(chain[i].get<long long>())
                        : ParameterValue::real(chain[i].get<double>());
  // r is not serialized; it is determined by gamma and S.
  cert.r = 0;
  for (int u : set_to_vector(cert.members))
    if (u < cert.gamma.order()) cert.r = std::max(cert.r, cert.gamma.degree(u));
  return cert;
}

}  // namespace hamex

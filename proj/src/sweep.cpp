#include "hamex/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "hamex/parallel.hpp"

namespace hamex {

namespace {

std::string source_string(const SweepSource& source) {
  if (source.kind == SweepSource::Kind::Exhaustive) return "exhaustive-labeled";
  return "graph6-stream(" + source.path + ")";
}

// Per-worker scan state. `top` holds every candidate whose value is within
// tol of the worker's running best, so the merged argmax set cannot depend on
// how the population was split across workers.
struct ScanState {
  std::int64_t candidates = 0;
  bool any = false;
  ParameterValue best{};
  std::vector<std::pair<Graph, ParameterValue>> top;
  std::vector<Graph> exceed;
};

template <typename Fetch>
std::vector<ScanState> scan_population(const SweepSpec& spec, const ParameterValue& family_value,
                                       bool prefilter, long long prefilter_floor,
                                       std::int64_t count, Fetch&& fetch, int jobs) {
  return run_strided<ScanState>(count, jobs, [&](ScanState& st, std::int64_t i) {
    Graph g = fetch(i);
    if (g.min_degree() < spec.k) return;
    if (satisfies(g, spec.property)) return;
    ++st.candidates;
    // Graphs this sparse cannot reach the family's spectral value, so the
    // eigensolve is skipped; they still count as candidates.
    if (prefilter && g.edge_count() < prefilter_floor) return;
    ParameterValue v = evaluate(spec.parameter, g);
    if (compare(v, family_value, spec.tol) > 0) st.exceed.push_back(g);
    if (!st.any) {
      st.any = true;
      st.best = v;
    } else if (v.as_double() > st.best.as_double()) {
      st.best = v;
      std::erase_if(st.top,
                    [&](const auto& e) { return compare(e.second, st.best, spec.tol) < 0; });
    }
    if (compare(v, st.best, spec.tol) == 0) st.top.emplace_back(g, v);
  });
}

SweepReport finish_scan(const SweepSpec& spec, std::int64_t population,
                        std::vector<ScanState> states, FamilyScan family, bool weak) {
  SweepReport r;
  r.spec = spec;
  r.population_size = population;
  r.family = std::move(family);
  r.weak_mode = weak;

  bool any = false;
  ParameterValue best{};
  std::vector<std::pair<Graph, ParameterValue>> pool;
  std::vector<Graph> exceed;
  for (auto& st : states) {
    r.candidates += st.candidates;
    if (st.any && (!any || st.best.as_double() > best.as_double())) {
      any = true;
      best = st.best;
    }
    for (auto& e : st.top) pool.push_back(std::move(e));
    for (auto& g : st.exceed) exceed.push_back(std::move(g));
  }

  std::vector<Graph> argmax_reps;
  if (any) {
    r.max_value = best;
    std::erase_if(pool, [&](const auto& e) { return compare(e.second, best, spec.tol) != 0; });
    std::vector<std::pair<std::string, Graph>> named;
    named.reserve(pool.size());
    for (auto& [g, v] : pool) named.emplace_back(to_graph6(g), std::move(g));
    std::sort(named.begin(), named.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Deduplicate up to isomorphism; the lex scan keeps the smallest graph6
    // string of each class as its representative.
    for (auto& [g6, g] : named) {
      bool seen = false;
      for (const Graph& rep : argmax_reps)
        if (are_isomorphic(g, rep)) {
          seen = true;
          break;
        }
      if (!seen) {
        argmax_reps.push_back(g);
        r.argmax.push_back(g6);
      }
    }
  }

  r.counterexamples.reserve(exceed.size());
  for (const Graph& g : exceed) r.counterexamples.push_back(to_graph6(g));
  std::sort(r.counterexamples.begin(), r.counterexamples.end());

  if (weak) {
    r.match = any && compare(best, r.family.value, spec.tol) <= 0;
    r.endpoint_attained =
        compare(r.family.per_s.front().second, r.family.value, spec.tol) == 0 ||
        compare(r.family.per_s.back().second, r.family.value, spec.tol) == 0;
  } else if (any) {
    r.match = compare(best, r.family.value, spec.tol) == 0;
    if (r.match) {
      std::vector<Graph> members;
      for (const auto& [s, v] : r.family.per_s)
        members.push_back(build_family({spec.property, spec.n, s}));
      for (const Graph& rep : argmax_reps) {
        bool in_family = false;
        for (const Graph& m : members)
          if (are_isomorphic(rep, m)) {
            in_family = true;
            break;
          }
        if (!in_family) {
          r.match = false;
          break;
        }
      }
    }
  }
  return r;
}

SweepReport run_sweep(const SweepSpec& spec, const SweepOptions& opts, bool weak) {
  if (spec.n < 1 || spec.n > kMaxVertices)
    throw std::invalid_argument("sweep: order out of range");
  if (spec.k < 1) throw std::invalid_argument("sweep: k must be at least 1");
  if (spec.property == HamProperty::Connected && spec.k < 2)
    throw std::invalid_argument("sweep: connected scans need k >= 2");
  if (!(spec.tol >= 0)) throw std::invalid_argument("sweep: tol must be non-negative");

  // Rejects empty family ranges, which is also the spec-validity gate.
  FamilyScan family = family_max(spec.parameter, spec.n, spec.k, spec.property, spec.tol);

  bool prefilter = !spec.parameter.is_integer() && !opts.no_prefilter;
  long long prefilter_floor = 0;
  if (prefilter) {
    FamilyScan edges = family_max(ParameterId::edge(), spec.n, spec.k, spec.property, spec.tol);
    prefilter_floor = edges.value.ivalue - spec.n;
  }

  if (spec.source.kind == SweepSource::Kind::Exhaustive) {
    if (spec.n > 8)
      throw std::invalid_argument("sweep: exhaustive source supports n <= 8 only");
    if (spec.n == 8 && !opts.allow_large)
      throw std::invalid_argument(
          "sweep: exhaustive n = 8 scans 2^28 graphs; enable allow_large to proceed");
    LabeledEnumeration en = enumerate_labeled(spec.n);
    auto states =
        scan_population(spec, family.value, prefilter, prefilter_floor, en.count,
                        [&](std::int64_t i) { return en.at(i); }, opts.jobs);
    return finish_scan(spec, en.count, std::move(states), std::move(family), weak);
  }

  std::vector<Graph> graphs = ingest_graph6(spec.source.path);
  if (!graphs.empty() && graphs.front().order() != spec.n)
    throw std::invalid_argument("sweep: stream has order " +
                                std::to_string(graphs.front().order()) + " but spec wants n = " +
                                std::to_string(spec.n));
  auto count = static_cast<std::int64_t>(graphs.size());
  auto states = scan_population(spec, family.value, prefilter, prefilter_floor, count,
                                [&](std::int64_t i) { return graphs[i]; }, opts.jobs);
  return finish_scan(spec, count, std::move(states), std::move(family), weak);
}

}  // namespace

Graph LabeledEnumeration::at(std::int64_t index) const {
  if (index < 0 || index >= count)
    throw std::invalid_argument("enumerate_labeled: index out of range");
  return graph_from_mask(n, static_cast<std::uint64_t>(index));
}

LabeledEnumeration enumerate_labeled(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_labeled: n must be between 1 and 8");
  int pairs = n * (n - 1) / 2;
  return {n, std::int64_t{1} << pairs};
}

std::vector<Graph> ingest_graph6(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 stream: " + path);
  std::vector<Graph> out;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      Graph g = from_graph6(line);
      if (!out.empty() && g.order() != out.front().order())
        throw std::runtime_error("order " + std::to_string(g.order()) +
                                 " differs from the stream's order " +
                                 std::to_string(out.front().order()));
      out.push_back(g);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

SweepReport verify_theorem(const SweepSpec& spec, const SweepOptions& opts) {
  return run_sweep(spec, opts, false);
}

SweepReport verify_erdos(int n, int k, const SweepOptions& opts) {
  SweepSpec spec{n, k, HamProperty::Cycle, ParameterId::edge(), SweepSource::exhaustive(),
                 kCmpTol};
  if (n <= 7) return verify_theorem(spec, opts);
  if (n != 8) throw std::invalid_argument("verify_erdos: exhaustive source supports n <= 8 only");
  if (!opts.allow_large)
    throw std::invalid_argument(
        "verify_erdos: n = 8 scans 2^28 graphs; enable allow_large to proceed");

  long long threshold = erdos_threshold(n, k);
  FamilyScan family = family_max(spec.parameter, n, k, spec.property, spec.tol);

  // Only graphs with at least `threshold` edges can attain or beat the bound,
  // so the scan is restricted to them; every potential counterexample and
  // every argmax has that many edges. The candidates field consequently
  // counts examined candidates, not all candidates in the population.
  int pairs = n * (n - 1) / 2;
  std::uint64_t limit = std::uint64_t{1} << pairs;
  std::vector<std::uint64_t> masks;
  for (int m = static_cast<int>(threshold); m <= pairs; ++m) {
    std::uint64_t v = (std::uint64_t{1} << m) - 1;
    while (v < limit) {
      masks.push_back(v);
      std::uint64_t c = v & (~v + 1);
      std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  auto count = static_cast<std::int64_t>(masks.size());
  auto states = scan_population(spec, family.value, false, 0, count,
                                [&](std::int64_t i) { return graph_from_mask(n, masks[i]); },
                                opts.jobs);
  return finish_scan(spec, std::int64_t{1} << pairs, std::move(states), std::move(family), false);
}

SweepReport verify_weak_bound(const SweepSpec& spec, const SweepOptions& opts) {
  if (spec.parameter.kind != ParameterKind::CliqueCount)
    throw std::invalid_argument("verify_weak_bound: parameter must be a clique count");
  return run_sweep(spec, opts, true);
}

namespace {

nlohmann::ordered_json value_json(const ParameterValue& v) {
  if (v.exact) return v.ivalue;
  return v.rvalue;
}

std::string csv_value(const ParameterValue& v) {
  if (v.exact) return std::to_string(v.ivalue);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v.rvalue);
  return buf;
}

}  // namespace

std::string to_json_string(const SweepReport& report) {
  nlohmann::ordered_json j;
  auto& spec = j["spec"] = nlohmann::ordered_json::object();
  spec["n"] = report.spec.n;
  spec["k"] = report.spec.k;
  spec["property"] = to_string(report.spec.property);
  spec["parameter"] = report.spec.parameter.token();
  spec["source"] = source_string(report.spec.source);
  spec["tol"] = report.spec.tol;
  j["population_size"] = report.population_size;
  j["candidates"] = report.candidates;
  if (report.candidates > 0)
    j["max_value"] = value_json(report.max_value);
  else
    j["max_value"] = nullptr;
  j["argmax"] = report.argmax;
  auto& fam = j["family"] = nlohmann::ordered_json::object();
  fam["s_star"] = report.family.s_star;
  fam["value"] = value_json(report.family.value);
  auto& per_s = fam["per_s"] = nlohmann::ordered_json::object();
  for (const auto& [s, v] : report.family.per_s) per_s[std::to_string(s)] = value_json(v);
  j["match"] = report.match;
  j["counterexamples"] = report.counterexamples;
  if (report.weak_mode) j["endpoint_attained"] = report.endpoint_attained;
  return j.dump(2);
}

std::string sweep_csv_header() {
  return "property,n,k,parameter,source,population_size,candidates,max_value,"
         "family_s_star,family_value,match\n";
}

std::string sweep_csv_row(const SweepReport& report) {
  std::string out = to_string(report.spec.property) + "," + std::to_string(report.spec.n) + "," +
                    std::to_string(report.spec.k) + "," + report.spec.parameter.token() + "," +
                    source_string(report.spec.source) + "," +
                    std::to_string(report.population_size) + "," +
                    std::to_string(report.candidates) + ",";
  if (report.candidates > 0) out += csv_value(report.max_value);
  out += "," + std::to_string(report.family.s_star) + "," + csv_value(report.family.value) + "," +
         (report.match ? "true" : "false") + "\n";
  return out;
}

}  // namespace hamex

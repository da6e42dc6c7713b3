#include "hamex/families.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hamex/spectral.hpp"

namespace hamex {

std::pair<int, int> family_index_range(HamProperty property, int n) {
  switch (property) {
    case HamProperty::Cycle: return {1, (n - 1) / 2};
    case HamProperty::Path: return {2, n / 2};
    case HamProperty::Connected: return {1, n / 2 - 1};
  }
  throw std::logic_error("bad HamProperty");
}

int family_index_floor(HamProperty property, int k) {
  switch (property) {
    case HamProperty::Cycle: return k;
    case HamProperty::Path: return k + 1;
    case HamProperty::Connected: return k - 1;
  }
  throw std::logic_error("bad HamProperty");
}

void validate(const FamilySpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVertices)
    throw std::invalid_argument("family order out of range");
  auto [lo, hi] = family_index_range(spec.property, spec.n);
  if (spec.s < lo || spec.s > hi)
    throw std::invalid_argument("family index s=" + std::to_string(spec.s) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] for " + to_string(spec.property) +
                                ", n=" + std::to_string(spec.n));
}

FamilyBlocks family_blocks(const FamilySpec& spec) {
  validate(spec);
  switch (spec.property) {
    case HamProperty::Cycle: return {spec.s, spec.s, spec.n - 2 * spec.s};
    case HamProperty::Path: return {spec.s - 1, spec.s, spec.n - 2 * spec.s + 1};
    case HamProperty::Connected: return {spec.s + 1, spec.s, spec.n - 2 * spec.s - 1};
  }
  throw std::logic_error("bad HamProperty");
}

Graph build_family(const FamilySpec& spec) {
  FamilyBlocks b = family_blocks(spec);
  // Layout: join clique, then independent set, then big clique. Block sizes
  // of zero fall out naturally (the loops are empty).
  int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < b.join; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  for (int u = b.join + b.independent; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::build(n, edges);
}

long long binomial(int n, int k) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("binomial needs 0 <= n <= 62");
  if (k < 0 || k > n) return 0;
  // Pascal's triangle: addition only, every entry for n <= 62 fits.
  static const auto table = [] {
    std::vector<std::vector<long long>> t(kMaxVertices + 1);
    for (int i = 0; i <= kMaxVertices; ++i) {
      t[i].assign(i + 1, 1);
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  return table[n][k];
}

long long family_edge_count(const FamilySpec& spec) {
  validate(spec);
  long long n = spec.n, s = spec.s;
  switch (spec.property) {
    case HamProperty::Cycle:
      return binomial(static_cast<int>(n - s), 2) + s * s;
    case HamProperty::Path:
      return binomial(static_cast<int>(s - 1), 2) +
             binomial(static_cast<int>(n - 2 * s + 1), 2) + (s - 1) * (n - s + 1);
    case HamProperty::Connected:
      return binomial(static_cast<int>(s + 1), 2) +
             binomial(static_cast<int>(n - 2 * s - 1), 2) + (s + 1) * (n - s - 1);
  }
  throw std::logic_error("bad HamProperty");
}

long long family_clique_count(const FamilySpec& spec, int k) {
  if (spec.property != HamProperty::Cycle)
    throw std::invalid_argument("clique closed form is for the cycle family");
  validate(spec);
  if (k < 2) throw std::invalid_argument("clique size must be at least 2");
  // A k-clique lies inside the K_{n-s} formed by the two clique blocks, or
  // uses exactly one independent vertex plus k-1 join vertices.
  return binomial(spec.n - spec.s, k) +
         spec.s * binomial(spec.s, k - 1);
}

long long family_clique_count_variant(const FamilySpec& spec, int k) {
  if (spec.property != HamProperty::Cycle)
    throw std::invalid_argument("clique closed form is for the cycle family");
  validate(spec);
  if (k < 2) throw std::invalid_argument("clique size must be at least 2");
  return static_cast<long long>(spec.s) * binomial(spec.s - 1, k - 1) +
         binomial(spec.n - spec.s, k);
}

FamilyScan family_max(const ParameterId& p, int n, int k, HamProperty property, double tol) {
  if (k < 1) throw std::invalid_argument("minimum degree k must be at least 1");
  auto [lo, hi] = family_index_range(property, n);
  lo = std::max(lo, family_index_floor(property, k));
  if (lo > hi)
    throw std::invalid_argument("no family member of order " + std::to_string(n) +
                                " has minimum degree >= " + std::to_string(k) + " (" +
                                to_string(property) + ")");
  FamilyScan scan;
  for (int s = lo; s <= hi; ++s) {
    ParameterValue v = evaluate(p, build_family({property, n, s}));
    scan.per_s.push_back({s, v});
    if (scan.per_s.size() == 1 || compare(v, scan.value, tol) > 0) {
      scan.s_star = s;
      scan.value = v;
    }
  }
  return scan;
}

long long erdos_threshold(int n, int k) {
  int h = (n - 1) / 2;
  if (k < 1 || k > h)
    throw std::invalid_argument("minimum degree k must satisfy 1 <= k <= (n-1)/2");
  auto branch = [n](long long s) { return binomial(static_cast<int>(n - s), 2) + s * s; };
  return std::max(branch(k), branch(h));
}

double quotient_spectral_radius(int n, int s, double tol) {
  validate({HamProperty::Cycle, n, s});
  // Equitable partition {join clique, independent set, big clique} with
  // blocks of size s, s, n-2s. Conjugating the quotient by sqrt(block sizes)
  // makes it symmetric without moving the spectrum.
  double sj = s, sb = n - 2 * s;
  double cross = std::sqrt(sj * sb);
  std::vector<double> m = {
      sj - 1, sj,  cross,
      sj,     0.0, 0.0,
      cross,  0.0, sb - 1,
  };
  return largest_symmetric_eigenvalue(std::move(m), 3, tol);
}

std::string family_table_csv(HamProperty property, int n, int k, const ParameterId& p,
                             const FamilyScan& scan) {
  std::string out = "property,n,k,s,parameter,value\n";
  std::string prefix = to_string(property) + "," + std::to_string(n) + "," +
                       std::to_string(k) + ",";
  for (const auto& [s, v] : scan.per_s) {
    out += prefix + std::to_string(s) + "," + p.token() + ",";
    if (v.exact) {
      out += std::to_string(v.ivalue);
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9f", v.rvalue);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace hamex

#include "hamex/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace hamex {

namespace {

// In-place Householder reduction of the symmetric matrix a (row-major, lower
// triangle authoritative) to tridiagonal form: diagonal d, subdiagonal e.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  for (int k = 0; k < n - 2; ++k) {
    // zero out column k below the subdiagonal
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(at(i, k));
    if (scale == 0.0) {
      e[k + 1] = 0.0;
      continue;
    }
    double h = 0.0;
    std::vector<double> v(n, 0.0);
    for (int i = k + 1; i < n; ++i) {
      v[i] = at(i, k) / scale;
      h += v[i] * v[i];
    }
    double f = v[k + 1];
    double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
    e[k + 1] = scale * g;
    h -= f * g;
    v[k + 1] = f - g;

    // p = A v / h, then rank-two update A -= v q^T + q v^T
    std::vector<double> p(n, 0.0);
    for (int i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j <= i; ++j) s += at(i, j) * v[j];
      for (int j = i + 1; j < n; ++j) s += at(j, i) * v[j];
      p[i] = s / h;
    }
    double kk = 0.0;
    for (int i = k + 1; i < n; ++i) kk += v[i] * p[i];
    kk /= 2.0 * h;
    for (int i = k + 1; i < n; ++i) p[i] -= kk * v[i];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j <= i; ++j)
        at(i, j) -= v[i] * p[j] + p[i] * v[j];
  }
  if (n >= 2) e[n - 1] = a[(n - 1) * n + (n - 2)];
  for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Number of eigenvalues of the tridiagonal matrix strictly below x
// (Sturm sequence sign count).
int count_below(const std::vector<double>& d, const std::vector<double>& e,
                int n, double x, double pivmin) {
  int count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    q = d[i] - x - e[i] * e[i] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

double largest_symmetric_eigenvalue(std::vector<double> a, int n, double tol) {
  if (n < 1) throw std::invalid_argument("matrix order must be positive");
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix buffer does not match its order");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (n == 1) return a[0];

  std::vector<double> d, e;
  tridiagonalize(a, n, d, e);

  double lo = d[0], hi = d[0];
  for (int i = 0; i < n; ++i) {
    double r = std::abs(e[i]) + (i + 1 < n ? std::abs(e[i + 1]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  double pivmin = 1e-290;
  // widen so the invariant count(lo) < n <= count(hi) holds at the start
  double pad = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      throw std::runtime_error("eigenvalue bisection stalled before reaching tolerance");
    if (count_below(d, e, n, mid, pivmin) >= n)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hamex

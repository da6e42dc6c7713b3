#pragma once

#include <vector>

namespace hamex {

// Largest eigenvalue of a symmetric matrix, |result - lambda_max| <= tol.
// `a` is row-major n x n; only the lower triangle is read. Householder
// reduction to tridiagonal form, then Sturm-count bisection, so the answer
// carries an interval guarantee instead of an iteration-convergence gamble.
// Throws std::invalid_argument for bad arguments and std::runtime_error if
// the interval cannot be narrowed to tol (tolerance below the resolution of
// double at this scale).
double largest_symmetric_eigenvalue(std::vector<double> a, int n, double tol);

}  // namespace hamex

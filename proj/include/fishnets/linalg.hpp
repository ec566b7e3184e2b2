#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fishnets/errors.hpp"

namespace fishnets {

using Vec = std::vector<double>;

// Dense row-major matrix. Small and unadorned on purpose: the hot paths
// (dense-net forward/backward) index rows directly.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  double* row(std::size_t i) { return a.data() + i * cols; }
  const double* row(std::size_t i) const { return a.data() + i * cols; }

  std::span<const double> row_span(std::size_t i) const { return {row(i), cols}; }

  void fill(double v) { std::fill(a.begin(), a.end(), v); }
};

inline double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

inline Vec matvec(const Mat& m, std::span<const double> x) {
  if (x.size() != m.cols) raise(ErrorCategory::Shape, "matvec: dimension mismatch");
  Vec y(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) y[i] = dot(m.row_span(i), x);
  return y;
}

// y += Mᵀ x  (used when pushing gradients back through a linear map)
inline void matvec_transpose_add(const Mat& m, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double xi = x[i];
    const double* r = m.row(i);
    for (std::size_t j = 0; j < m.cols; ++j) y[j] += xi * r[j];
  }
}

// In-place lower Cholesky factorization of a symmetric positive-definite
// matrix (only the lower triangle of `a` is referenced). Returns false if a
// pivot is not strictly positive; `a` is then left partially overwritten.
inline bool cholesky_factor(Mat& a) {
  const std::size_t n = a.rows;
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double lj = std::sqrt(d);
    a(j, j) = lj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / lj;
    }
  }
  // zero the strict upper triangle so the result is exactly L
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = 0.0;
  return true;
}

// Solves L Lᵀ x = b given the lower factor L.
inline Vec cholesky_solve(const Mat& L, Vec b) {
  const std::size_t n = L.rows;
  if (b.size() != n) raise(ErrorCategory::Shape, "cholesky_solve: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * b[k];
    b[i] = s / L(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= L(k, i) * b[k];
    b[i] = s / L(i, i);
  }
  return b;
}

// Cheap condition estimate from the Cholesky factor: (max diag / min diag)².
// A lower bound on the true 2-norm condition number; adequate as a guard.
inline double spd_condition_estimate(const Mat& L) {
  double dmin = L(0, 0), dmax = L(0, 0);
  for (std::size_t i = 1; i < L.rows; ++i) {
    dmin = std::min(dmin, L(i, i));
    dmax = std::max(dmax, L(i, i));
  }
  if (dmin <= 0.0) return std::numeric_limits<double>::infinity();
  const double r = dmax / dmin;
  return r * r;
}

inline double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double sigmoid(double x) {
  return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

}  // namespace fishnets

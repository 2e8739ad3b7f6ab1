#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glap/sparse_matrix.hpp"
#include "glap/work.hpp"

namespace glap {

struct LmaxEstimate {
  double value = 0.0;
  /// Set when the operator annihilates the start vector (e.g. a zero matrix).
  bool zero_operator = false;
  int iterations = 0;
};

/// Largest-eigenvalue estimate from `iters` Lanczos steps with full
/// reorthogonalization and a seeded uniform start vector. With `dinv` the
/// estimate is for D^-1 L, computed on the similar matrix D^-1/2 L D^-1/2.
/// The result is the top Ritz value, so it never exceeds the true maximum
/// beyond rounding.
LmaxEstimate estimate_lmax(const Matrix& l, int iters, std::uint64_t seed,
                           std::span<const double> dinv = {});

/// One application of the degree-`degree` Chebyshev polynomial smoother for
/// L x = b on the interval [lo, hi], updating x in place. With `dinv` the
/// residual is Jacobi preconditioned. Performs exactly `degree` products
/// with L. Throws std::invalid_argument unless 0 < lo < hi and degree >= 1.
void chebyshev_smooth(const Matrix& l, std::span<const double> b, std::span<double> x, int degree,
                      double lo, double hi, std::span<const double> dinv = {});

/// Chebyshev parameters for one operator.
struct SmootherData {
  int degree = 2;
  double lmax = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> dinv;  // empty: unpreconditioned

  /// chebyshev_smooth plus work accounting on `level`.
  void apply(const Matrix& l, std::span<const double> b, std::span<double> x, index_t level,
             WorkCounter* work) const;
};

struct SmootherOptions {
  int degree = 2;
  int lanczos_iters = 10;
  double lo_factor = 0.3;
  double hi_factor = 1.1;
  bool jacobi = true;
  std::uint64_t seed = 0;
};

/// Estimates lmax and fixes the interval [lo_factor, hi_factor] * lmax.
/// Throws std::domain_error for an operator with no positive spectrum.
SmootherData make_smoother(const Matrix& l, const SmootherOptions& opts);

}  // namespace glap

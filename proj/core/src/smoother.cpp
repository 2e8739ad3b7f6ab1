#include "glap/smoother.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "glap/rng.hpp"
#include "glap/vector_ops.hpp"

namespace glap {

namespace {

bool relative_zero(double x, double scale) { return x <= 1e-14 * scale; }

}  // namespace

LmaxEstimate estimate_lmax(const Matrix& l, int iters, std::uint64_t seed,
                           std::span<const double> dinv) {
  if (l.nrows() != l.ncols()) throw std::invalid_argument("estimate_lmax: matrix is not square");
  if (iters < 1) throw std::invalid_argument("estimate_lmax: need at least one iteration");
  const auto n = static_cast<std::size_t>(l.nrows());
  if (!dinv.empty() && dinv.size() != n) throw std::invalid_argument("estimate_lmax: dinv size");
  LmaxEstimate out;
  if (n == 0) {
    out.zero_operator = true;
    return out;
  }

  Vector scale;
  if (!dinv.empty()) {
    scale.resize(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = std::sqrt(dinv[i]);
  }
  Vector tmp(n);
  auto apply = [&](std::span<const double> v, std::span<double> w) {
    if (scale.empty()) {
      multiply(l, v, w);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) tmp[i] = scale[i] * v[i];
    multiply(l, tmp, w);
    for (std::size_t i = 0; i < n; ++i) w[i] *= scale[i];
  };

  SplitMix64 rng(seed);
  Vector v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  const double v_norm = norm2(v);
  if (v_norm == 0.0) {
    v.assign(n, 0.0);
    v[0] = 1.0;
  } else {
    for (auto& x : v) x /= v_norm;
  }

  const int steps = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(iters), n));
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(steps));
  std::vector<double> alpha;
  std::vector<double> beta;
  Vector w(n);
  double op_scale = 0.0;
  for (int j = 0; j < steps; ++j) {
    basis.push_back(v);
    apply(v, w);
    const double w_norm = norm2(w);
    if (j == 0) {
      op_scale = w_norm;
      if (w_norm == 0.0) {
        out.zero_operator = true;
        return out;
      }
    }
    const double a = dot(w, v);
    alpha.push_back(a);
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) axpy(-dot(w, q), q, w);
    }
    const double b = norm2(w);
    out.iterations = j + 1;
    if (j + 1 == steps || relative_zero(b, op_scale)) break;
    beta.push_back(b);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
  }

  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k);
  Eigen::VectorXd sub(std::max<Eigen::Index>(k - 1, 0));
  for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  out.value = std::max(eig.eigenvalues().maxCoeff(), 0.0);
  return out;
}

void chebyshev_smooth(const Matrix& l, std::span<const double> b, std::span<double> x, int degree,
                      double lo, double hi, std::span<const double> dinv) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("chebyshev_smooth: need 0 < lo < hi");
  }
  if (degree < 1) throw std::invalid_argument("chebyshev_smooth: degree must be at least 1");
  const auto n = x.size();
  if (b.size() != n || static_cast<std::size_t>(l.nrows()) != n) {
    throw std::invalid_argument("chebyshev_smooth: size mismatch");
  }
  if (!dinv.empty() && dinv.size() != n) throw std::invalid_argument("chebyshev_smooth: dinv size");

  const double theta = 0.5 * (hi + lo);
  const double delta = 0.5 * (hi - lo);
  const double sigma = theta / delta;
  double rho = 1.0 / sigma;

  Vector r(n);
  Vector d(n);
  Vector ld(n);
  residual(l, b, x, r);
  auto precondition = [&](std::size_t i) { return dinv.empty() ? r[i] : dinv[i] * r[i]; };
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = precondition(i) / theta;
    x[i] += d[i];
  }
  for (int k = 1; k < degree; ++k) {
    multiply(l, d, ld);
    for (std::size_t i = 0; i < n; ++i) r[i] -= ld[i];
    const double rho_next = 1.0 / (2.0 * sigma - rho);
    const double c1 = rho_next * rho;
    const double c2 = 2.0 * rho_next / delta;
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = c1 * d[i] + c2 * precondition(i);
      x[i] += d[i];
    }
    rho = rho_next;
  }
}

void SmootherData::apply(const Matrix& l, std::span<const double> b, std::span<double> x,
                         index_t level, WorkCounter* work) const {
  chebyshev_smooth(l, b, x, degree, lo, hi, dinv);
  if (work != nullptr) {
    work->add(level, WorkKind::smoother, static_cast<double>(degree) * static_cast<double>(l.nnz()));
  }
}

SmootherData make_smoother(const Matrix& l, const SmootherOptions& opts) {
  SmootherData s;
  s.degree = opts.degree;
  if (opts.jacobi) {
    s.dinv.resize(static_cast<std::size_t>(l.nrows()));
    for (index_t i = 0; i < l.nrows(); ++i) {
      const double d = l.at(i, i);
      if (!(d > 0.0)) throw std::domain_error("make_smoother: nonpositive diagonal");
      s.dinv[static_cast<std::size_t>(i)] = 1.0 / d;
    }
  }
  const auto est = estimate_lmax(l, opts.lanczos_iters, opts.seed, s.dinv);
  if (est.zero_operator || !(est.value > 0.0)) {
    throw std::domain_error("make_smoother: operator has no positive spectrum");
  }
  s.lmax = est.value;
  s.lo = opts.lo_factor * est.value;
  s.hi = opts.hi_factor * est.value;
  return s;
}

}  // namespace glap

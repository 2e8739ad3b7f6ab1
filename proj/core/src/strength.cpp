#include "glap/strength.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "glap/rng.hpp"
#include "glap/vector_ops.hpp"

namespace glap {

std::vector<double> TestVectors::column(index_t k) const {
  std::vector<double> out(static_cast<std::size_t>(n_));
  for (index_t i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, k);
  return out;
}

void TestVectors::set_column(index_t k, std::span<const double> values) {
  for (index_t i = 0; i < n_; ++i) (*this)(i, k) = values[static_cast<std::size_t>(i)];
}

namespace {

std::vector<double> random_column(index_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> col(static_cast<std::size_t>(n));
  for (auto& v : col) v = rng.uniform(-1.0, 1.0);
  return col;
}

}  // namespace

TestVectors random_test_vectors(index_t n, index_t m, std::uint64_t seed) {
  TestVectors x(n, m);
  for (index_t k = 0; k < m; ++k) x.set_column(k, random_column(n, derive_seed(seed, static_cast<std::uint64_t>(k))));
  return x;
}

void jacobi_smooth(const Matrix& l, std::span<double> x, int sweeps, double omega) {
  const index_t n = l.nrows();
  std::vector<double> dinv(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) {
    const double d = l.at(i, i);
    if (d == 0.0) throw std::domain_error("jacobi_smooth: zero diagonal at row " + std::to_string(i));
    dinv[static_cast<std::size_t>(i)] = 1.0 / d;
  }
  std::vector<double> lx(static_cast<std::size_t>(n));
  for (int s = 0; s < sweeps; ++s) {
    multiply(l, x, lx);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= omega * dinv[i] * lx[i];
  }
}

TestVectors test_vectors(const Matrix& l, const TestVectorOptions& opts) {
  const index_t n = l.nrows();
  TestVectors x(n, opts.count);
  for (index_t k = 0; k < opts.count; ++k) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      auto col = random_column(n, derive_seed(opts.seed, static_cast<std::uint64_t>(k) + attempt * 0x10000ULL));
      jacobi_smooth(l, col, opts.sweeps, opts.omega);
      const bool nonzero = std::any_of(col.begin(), col.end(), [](double v) { return v != 0.0; });
      if (nonzero || n == 0 || attempt >= 16) {
        x.set_column(k, col);
        break;
      }
    }
  }
  return x;
}

Matrix affinity(const Matrix& l, const TestVectors& x) {
  if (x.rows() != l.nrows()) throw std::invalid_argument("affinity: test vector count mismatch");
  const index_t n = l.nrows();
  std::vector<double> sq(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) {
    const auto r = x.row(i);
    sq[static_cast<std::size_t>(i)] = dot(r, r);
  }
  std::vector<Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(l.nnz()));
  for (index_t i = 0; i < n; ++i) {
    for (const index_t j : l.row_cols(i)) {
      if (j == i) continue;
      const double ni = sq[static_cast<std::size_t>(i)];
      const double nj = sq[static_cast<std::size_t>(j)];
      if (ni == 0.0 || nj == 0.0) {
        throw std::domain_error("affinity: test vectors vanish at vertex " +
                                std::to_string(ni == 0.0 ? i : j));
      }
      const double ip = dot(x.row(i), x.row(j));
      t.push_back({i, j, (ip * ip) / (ni * nj)});
    }
  }
  return Matrix::from_triplets(n, n, std::move(t), Zeros::keep);
}

Matrix normalize_strength(const Matrix& c, const Distribution& dist) {
  const std::vector<double> ones(static_cast<std::size_t>(c.nrows()), 1.0);
  const auto row_max = spmv_semiring(dist.apply(c), std::span<const double>(ones), MaxTimes{});
  const auto col_max = spmv_semiring(dist.apply(transpose(c)), std::span<const double>(ones), MaxTimes{});
  return c.filter([](index_t i, index_t j, double v) { return i != j && v > 0.0; })
      .map([&](index_t i, index_t j, double v) {
        return v / std::max(row_max[static_cast<std::size_t>(i)], col_max[static_cast<std::size_t>(j)]);
      });
}

Matrix strength_matrix(const Matrix& l, const TestVectorOptions& opts, const Distribution& dist) {
  return normalize_strength(affinity(l, test_vectors(l, opts)), dist);
}

}  // namespace glap

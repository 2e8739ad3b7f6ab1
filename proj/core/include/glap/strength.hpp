#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glap/dist_matrix.hpp"
#include "glap/sparse_matrix.hpp"

namespace glap {

/// n x m block of test vectors, stored row-major so that the m values of a
/// vertex are contiguous.
class TestVectors {
 public:
  TestVectors() = default;
  TestVectors(index_t n, index_t m) : n_(n), m_(m), data_(static_cast<std::size_t>(n * m), 0.0) {}

  index_t rows() const noexcept { return n_; }
  index_t cols() const noexcept { return m_; }

  double& operator()(index_t i, index_t k) { return data_[static_cast<std::size_t>(i * m_ + k)]; }
  double operator()(index_t i, index_t k) const { return data_[static_cast<std::size_t>(i * m_ + k)]; }

  std::span<const double> row(index_t i) const {
    return std::span<const double>(data_).subspan(static_cast<std::size_t>(i * m_),
                                                  static_cast<std::size_t>(m_));
  }

  std::vector<double> column(index_t k) const;
  void set_column(index_t k, std::span<const double> values);

 private:
  index_t n_ = 0;
  index_t m_ = 0;
  std::vector<double> data_;
};

struct TestVectorOptions {
  index_t count = 4;
  int sweeps = 3;
  double omega = 2.0 / 3.0;
  std::uint64_t seed = 0;
};

/// Uniform(-1, 1) entries; column k is drawn from its own seeded stream.
TestVectors random_test_vectors(index_t n, index_t m, std::uint64_t seed);

/// `sweeps` damped Jacobi iterations on L x = 0: x <- x - omega D^-1 L x.
/// Throws std::domain_error on a zero diagonal entry.
void jacobi_smooth(const Matrix& l, std::span<double> x, int sweeps, double omega);

/// Random vectors smoothed one column at a time. A column that smooths to
/// exactly zero is redrawn from a fresh stream.
TestVectors test_vectors(const Matrix& l, const TestVectorOptions& opts = {});

/// Affinity on the off-diagonal pattern of L:
///   C_ij = (sum_k x_ik x_jk)^2 / ((sum_k x_ik^2) (sum_k x_jk^2)).
/// Entries that come out zero stay in the pattern. Throws std::domain_error if
/// a row of X has zero norm.
Matrix affinity(const Matrix& l, const TestVectors& x);

/// S_ij = C_ij / max(max_s C_is, max_s C_sj), zero entries dropped. The row
/// and column maxima are (max, *) products over the given layout.
Matrix normalize_strength(const Matrix& c, const Distribution& dist = {});

/// test_vectors + affinity + normalize_strength.
Matrix strength_matrix(const Matrix& l, const TestVectorOptions& opts = {},
                       const Distribution& dist = {});

}  // namespace glap

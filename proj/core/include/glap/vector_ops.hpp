#pragma once

#include <span>
#include <vector>

#include "glap/sparse_matrix.hpp"

namespace glap {

using Vector = std::vector<double>;

/// y = A x. Throws std::invalid_argument on a shape mismatch.
void multiply(const Matrix& a, std::span<const double> x, std::span<double> y);
Vector multiply(const Matrix& a, std::span<const double> x);

/// r = b - A x.
void residual(const Matrix& a, std::span<const double> b, std::span<const double> x,
              std::span<double> r);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
/// y += alpha x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double mean(std::span<const double> x);
/// Subtracts the mean, i.e. projects out the constant vector.
void remove_mean(std::span<double> x);

}  // namespace glap

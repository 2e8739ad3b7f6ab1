#include "glap/sparse_matrix.hpp"

#include <cmath>

#include "glap/dist_matrix.hpp"
#include "glap/vector_ops.hpp"

namespace glap {

Matrix spgemm(const Matrix& a, const Matrix& b) {
  if (a.ncols() != b.nrows()) {
    throw std::invalid_argument("spgemm: inner dimensions " + std::to_string(a.ncols()) + " and " +
                                std::to_string(b.nrows()) + " differ");
  }
  // Gustavson row-by-row with a dense accumulator and an occupancy marker.
  std::vector<double> acc(static_cast<std::size_t>(b.ncols()), 0.0);
  std::vector<index_t> mark(static_cast<std::size_t>(b.ncols()), -1);
  std::vector<index_t> touched;
  std::vector<index_t> ptr(static_cast<std::size_t>(a.nrows()) + 1, 0);
  std::vector<index_t> cols;
  std::vector<double> vals;
  for (index_t i = 0; i < a.nrows(); ++i) {
    touched.clear();
    const auto acols = a.row_cols(i);
    const auto avals = a.row_values(i);
    for (std::size_t p = 0; p < acols.size(); ++p) {
      const auto k = acols[p];
      const auto bcols = b.row_cols(k);
      const auto bvals = b.row_values(k);
      for (std::size_t q = 0; q < bcols.size(); ++q) {
        const auto j = static_cast<std::size_t>(bcols[q]);
        if (mark[j] != i) {
          mark[j] = i;
          acc[j] = 0.0;
          touched.push_back(bcols[q]);
        }
        acc[j] += avals[p] * bvals[q];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (const auto j : touched) {
      const double v = acc[static_cast<std::size_t>(j)];
      if (v != 0.0) {
        cols.push_back(j);
        vals.push_back(v);
      }
    }
    ptr[static_cast<std::size_t>(i) + 1] = static_cast<index_t>(cols.size());
  }
  return Matrix::from_csr(a.nrows(), b.ncols(), std::move(ptr), std::move(cols), std::move(vals));
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

GridShape parse_grid(std::string_view text) {
  const auto x = text.find_first_of("xX");
  auto parse = [&](std::string_view part) {
    if (part.empty()) throw std::invalid_argument("bad grid shape '" + std::string(text) + "'");
    index_t v = 0;
    for (const char c : part) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad grid shape '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
    }
    if (v < 1) throw std::invalid_argument("grid dimensions must be >= 1");
    return v;
  };
  if (x == std::string_view::npos) throw std::invalid_argument("bad grid shape '" + std::string(text) + "'");
  return {parse(text.substr(0, x)), parse(text.substr(x + 1))};
}

std::string to_string(GridShape grid) {
  return std::to_string(grid.rows) + "x" + std::to_string(grid.cols);
}

std::vector<index_t> even_splits(index_t n, index_t parts) {
  if (parts < 1) throw std::invalid_argument("even_splits: parts must be >= 1");
  std::vector<index_t> off(static_cast<std::size_t>(parts) + 1, 0);
  const index_t base = n / parts;
  const index_t rem = n % parts;
  for (index_t k = 0; k < parts; ++k) {
    off[static_cast<std::size_t>(k) + 1] = off[static_cast<std::size_t>(k)] + base + (k < rem ? 1 : 0);
  }
  return off;
}

void multiply(const Matrix& a, std::span<const double> x, std::span<double> y) {
  if (static_cast<index_t>(x.size()) != a.ncols() || static_cast<index_t>(y.size()) != a.nrows()) {
    throw std::invalid_argument("multiply: shape mismatch");
  }
  const auto ptr = a.row_ptr();
  const auto cols = a.col_idx();
  const auto vals = a.values();
  for (index_t i = 0; i < a.nrows(); ++i) {
    double s = 0.0;
    for (auto k = ptr[static_cast<std::size_t>(i)]; k < ptr[static_cast<std::size_t>(i) + 1]; ++k) {
      s += vals[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(cols[static_cast<std::size_t>(k)])];
    }
    y[static_cast<std::size_t>(i)] = s;
  }
}

Vector multiply(const Matrix& a, std::span<const double> x) {
  Vector y(static_cast<std::size_t>(a.nrows()));
  multiply(a, x, y);
  return y;
}

void residual(const Matrix& a, std::span<const double> b, std::span<const double> x,
              std::span<double> r) {
  multiply(a, x, r);
  if (b.size() != r.size()) throw std::invalid_argument("residual: shape mismatch");
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (const double v : x) s += v;
  return s / static_cast<double>(x.size());
}

void remove_mean(std::span<double> x) {
  const double m = mean(x);
  for (double& v : x) v -= m;
}

}  // namespace glap

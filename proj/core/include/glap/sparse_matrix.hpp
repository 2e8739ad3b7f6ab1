#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glap/types.hpp"

namespace glap {

template <class E>
struct Triplet {
  index_t row;
  index_t col;
  E value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// What from_triplets does with entries equal to E{} after duplicates are summed.
enum class Zeros { drop, keep };

/// Compressed sparse row matrix over an arbitrary element type.
///
/// Rows are stored in order and column indices are strictly increasing within
/// each row, so there are never duplicate (row, col) pairs.
template <class E>
class SparseMatrix {
 public:
  using value_type = E;

  SparseMatrix() : row_ptr_(1, 0) {}
  SparseMatrix(index_t nrows, index_t ncols)
      : nrows_(nrows), ncols_(ncols), row_ptr_(static_cast<std::size_t>(nrows) + 1, 0) {
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
  }

  /// Builds a matrix from unordered triplets. Duplicate coordinates are summed
  /// with operator+. Throws std::out_of_range on an index outside the shape.
  static SparseMatrix from_triplets(index_t nrows, index_t ncols, std::vector<Triplet<E>> entries,
                                    Zeros zeros = Zeros::drop) {
    SparseMatrix m(nrows, ncols);
    for (const auto& t : entries) {
      if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols) {
        throw std::out_of_range("SparseMatrix: entry (" + std::to_string(t.row) + ", " +
                                std::to_string(t.col) + ") outside " + std::to_string(nrows) +
                                "x" + std::to_string(ncols));
      }
    }
    // Stable, so duplicates are summed in insertion order.
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet<E>& a, const Triplet<E>& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    m.cols_.reserve(entries.size());
    m.values_.reserve(entries.size());
    std::size_t k = 0;
    while (k < entries.size()) {
      const index_t r = entries[k].row;
      const index_t c = entries[k].col;
      E sum = entries[k].value;
      ++k;
      while (k < entries.size() && entries[k].row == r && entries[k].col == c) {
        sum = sum + entries[k].value;
        ++k;
      }
      if (zeros == Zeros::drop && sum == E{}) continue;
      m.cols_.push_back(c);
      m.values_.push_back(std::move(sum));
      ++m.row_ptr_[static_cast<std::size_t>(r) + 1];
    }
    for (index_t i = 0; i < nrows; ++i) {
      m.row_ptr_[static_cast<std::size_t>(i) + 1] += m.row_ptr_[static_cast<std::size_t>(i)];
    }
    return m;
  }

  /// Adopts CSR arrays. Throws std::invalid_argument unless the arrays are
  /// consistent and columns are strictly increasing within every row.
  static SparseMatrix from_csr(index_t nrows, index_t ncols, std::vector<index_t> row_ptr,
                               std::vector<index_t> cols, std::vector<E> values) {
    if (nrows < 0 || ncols < 0 || row_ptr.size() != static_cast<std::size_t>(nrows) + 1 ||
        cols.size() != values.size() || row_ptr.front() != 0 ||
        row_ptr.back() != static_cast<index_t>(cols.size())) {
      throw std::invalid_argument("SparseMatrix::from_csr: inconsistent arrays");
    }
    for (index_t i = 0; i < nrows; ++i) {
      const auto b = row_ptr[static_cast<std::size_t>(i)];
      const auto e = row_ptr[static_cast<std::size_t>(i) + 1];
      if (e < b) throw std::invalid_argument("SparseMatrix::from_csr: decreasing row_ptr");
      for (auto k = b; k < e; ++k) {
        const auto c = cols[static_cast<std::size_t>(k)];
        if (c < 0 || c >= ncols || (k > b && cols[static_cast<std::size_t>(k) - 1] >= c)) {
          throw std::invalid_argument("SparseMatrix::from_csr: bad column order in row " +
                                      std::to_string(i));
        }
      }
    }
    SparseMatrix m;
    m.nrows_ = nrows;
    m.ncols_ = ncols;
    m.row_ptr_ = std::move(row_ptr);
    m.cols_ = std::move(cols);
    m.values_ = std::move(values);
    return m;
  }

  static SparseMatrix identity(index_t n) {
    std::vector<index_t> ptr(static_cast<std::size_t>(n) + 1);
    std::vector<index_t> cols(static_cast<std::size_t>(n));
    for (index_t i = 0; i <= n; ++i) ptr[static_cast<std::size_t>(i)] = i;
    for (index_t i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
    return from_csr(n, n, std::move(ptr), std::move(cols),
                    std::vector<E>(static_cast<std::size_t>(n), E{1}));
  }

  index_t nrows() const noexcept { return nrows_; }
  index_t ncols() const noexcept { return ncols_; }
  index_t nnz() const noexcept { return static_cast<index_t>(cols_.size()); }

  std::span<const index_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const index_t> col_idx() const noexcept { return cols_; }
  std::span<const E> values() const noexcept { return values_; }

  index_t row_begin(index_t i) const { return row_ptr_[static_cast<std::size_t>(i)]; }
  index_t row_end(index_t i) const { return row_ptr_[static_cast<std::size_t>(i) + 1]; }
  index_t row_nnz(index_t i) const { return row_end(i) - row_begin(i); }

  std::span<const index_t> row_cols(index_t i) const {
    return std::span<const index_t>(cols_).subspan(static_cast<std::size_t>(row_begin(i)),
                                                   static_cast<std::size_t>(row_nnz(i)));
  }
  std::span<const E> row_values(index_t i) const {
    return std::span<const E>(values_).subspan(static_cast<std::size_t>(row_begin(i)),
                                               static_cast<std::size_t>(row_nnz(i)));
  }

  /// Position of (i, j) in the value array, or -1 if not stored.
  index_t find(index_t i, index_t j) const {
    const auto cols = row_cols(i);
    const auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return -1;
    return row_begin(i) + static_cast<index_t>(it - cols.begin());
  }
  bool contains(index_t i, index_t j) const { return find(i, j) >= 0; }
  E at(index_t i, index_t j) const {
    const auto k = find(i, j);
    return k < 0 ? E{} : values_[static_cast<std::size_t>(k)];
  }

  std::vector<Triplet<E>> triplets() const {
    std::vector<Triplet<E>> out;
    out.reserve(cols_.size());
    for (index_t i = 0; i < nrows_; ++i) {
      for (auto k = row_begin(i); k < row_end(i); ++k) {
        out.push_back({i, cols_[static_cast<std::size_t>(k)], values_[static_cast<std::size_t>(k)]});
      }
    }
    return out;
  }

  /// Keeps the entries for which pred(row, col, value) is true.
  template <class Pred>
  SparseMatrix filter(Pred pred) const {
    std::vector<index_t> ptr(row_ptr_.size(), 0);
    std::vector<index_t> cols;
    std::vector<E> vals;
    for (index_t i = 0; i < nrows_; ++i) {
      for (auto k = row_begin(i); k < row_end(i); ++k) {
        const auto c = cols_[static_cast<std::size_t>(k)];
        const auto& v = values_[static_cast<std::size_t>(k)];
        if (pred(i, c, v)) {
          cols.push_back(c);
          vals.push_back(v);
        }
      }
      ptr[static_cast<std::size_t>(i) + 1] = static_cast<index_t>(cols.size());
    }
    SparseMatrix m;
    m.nrows_ = nrows_;
    m.ncols_ = ncols_;
    m.row_ptr_ = std::move(ptr);
    m.cols_ = std::move(cols);
    m.values_ = std::move(vals);
    return m;
  }

  /// Same pattern, values replaced by f(row, col, value).
  template <class F>
  auto map(F f) const {
    using R = decltype(f(index_t{}, index_t{}, std::declval<const E&>()));
    std::vector<R> vals;
    vals.reserve(values_.size());
    for (index_t i = 0; i < nrows_; ++i) {
      for (auto k = row_begin(i); k < row_end(i); ++k) {
        vals.push_back(f(i, cols_[static_cast<std::size_t>(k)], values_[static_cast<std::size_t>(k)]));
      }
    }
    return SparseMatrix<R>::from_csr(nrows_, ncols_, row_ptr_, cols_, std::move(vals));
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  index_t nrows_ = 0;
  index_t ncols_ = 0;
  std::vector<index_t> row_ptr_;
  std::vector<index_t> cols_;
  std::vector<E> values_;
};

template <class E>
SparseMatrix<E> transpose(const SparseMatrix<E>& a) {
  std::vector<index_t> ptr(static_cast<std::size_t>(a.ncols()) + 1, 0);
  for (const auto c : a.col_idx()) ++ptr[static_cast<std::size_t>(c) + 1];
  for (index_t j = 0; j < a.ncols(); ++j) {
    ptr[static_cast<std::size_t>(j) + 1] += ptr[static_cast<std::size_t>(j)];
  }
  std::vector<index_t> cols(static_cast<std::size_t>(a.nnz()));
  std::vector<E> vals(static_cast<std::size_t>(a.nnz()));
  std::vector<index_t> next(ptr.begin(), ptr.end() - 1);
  for (index_t i = 0; i < a.nrows(); ++i) {
    for (auto k = a.row_begin(i); k < a.row_end(i); ++k) {
      const auto c = a.col_idx()[static_cast<std::size_t>(k)];
      const auto dst = static_cast<std::size_t>(next[static_cast<std::size_t>(c)]++);
      cols[dst] = i;
      vals[dst] = a.values()[static_cast<std::size_t>(k)];
    }
  }
  return SparseMatrix<E>::from_csr(a.ncols(), a.nrows(), std::move(ptr), std::move(cols),
                                   std::move(vals));
}

using Matrix = SparseMatrix<double>;

/// Standard (+,*) product. Entries that cancel to exactly zero are dropped.
/// Throws std::invalid_argument on an inner dimension mismatch.
Matrix spgemm(const Matrix& a, const Matrix& b);

/// Largest absolute stored value (0 for an empty matrix).
double max_abs(const Matrix& a);

}  // namespace glap

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glap/parallel.hpp"
#include "glap/permutation.hpp"
#include "glap/semiring.hpp"
#include "glap/sparse_matrix.hpp"

namespace glap {

struct GridShape {
  index_t rows = 1;
  index_t cols = 1;

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Parses "RxC" (e.g. "3x2"). Throws std::invalid_argument on malformed input.
GridShape parse_grid(std::string_view text);
std::string to_string(GridShape grid);

/// Block boundaries for splitting n items into `parts` contiguous ranges: the
/// first n % parts ranges get one extra item. Returns parts + 1 offsets.
std::vector<index_t> even_splits(index_t n, index_t parts);

/// A matrix laid out on a grid of blocks, as a 2D edge distribution would
/// place it on a process grid. Rows and columns are relabeled by a permutation
/// before splitting; block (bi, bj) holds the entries whose permuted row lies
/// in row range bi and permuted column in column range bj, in local coordinates.
template <class E>
class DistMatrix {
 public:
  DistMatrix() = default;

  index_t nrows() const noexcept { return nrows_; }
  index_t ncols() const noexcept { return ncols_; }
  GridShape grid() const noexcept { return grid_; }
  const Permutation& row_perm() const noexcept { return row_perm_; }
  const Permutation& col_perm() const noexcept { return col_perm_; }
  std::span<const index_t> row_offsets() const noexcept { return row_off_; }
  std::span<const index_t> col_offsets() const noexcept { return col_off_; }

  const SparseMatrix<E>& block(index_t bi, index_t bj) const {
    return blocks_[static_cast<std::size_t>(bi * grid_.cols + bj)];
  }

  index_t nnz() const {
    index_t total = 0;
    for (const auto& b : blocks_) total += b.nnz();
    return total;
  }

  /// Concatenates the blocks and undoes the permutation.
  SparseMatrix<E> reassemble() const {
    std::vector<Triplet<E>> entries;
    entries.reserve(static_cast<std::size_t>(nnz()));
    for (index_t bi = 0; bi < grid_.rows; ++bi) {
      for (index_t bj = 0; bj < grid_.cols; ++bj) {
        for (const auto& t : block(bi, bj).triplets()) {
          entries.push_back({row_perm_.inverse(row_off_[static_cast<std::size_t>(bi)] + t.row),
                             col_perm_.inverse(col_off_[static_cast<std::size_t>(bj)] + t.col),
                             t.value});
        }
      }
    }
    return SparseMatrix<E>::from_triplets(nrows_, ncols_, std::move(entries), Zeros::keep);
  }

  template <class T>
  friend DistMatrix<T> block_partition(const SparseMatrix<T>& a, GridShape grid,
                                       const Permutation& row_perm, const Permutation& col_perm);

 private:
  index_t nrows_ = 0;
  index_t ncols_ = 0;
  GridShape grid_;
  Permutation row_perm_;
  Permutation col_perm_;
  std::vector<index_t> row_off_;
  std::vector<index_t> col_off_;
  std::vector<SparseMatrix<E>> blocks_;
};

template <class E>
DistMatrix<E> block_partition(const SparseMatrix<E>& a, GridShape grid,
                              const Permutation& row_perm, const Permutation& col_perm) {
  if (grid.rows < 1 || grid.cols < 1) throw std::invalid_argument("block_partition: empty grid");
  if (row_perm.size() != a.nrows() || col_perm.size() != a.ncols()) {
    throw std::invalid_argument("block_partition: permutation size mismatch");
  }
  DistMatrix<E> d;
  d.nrows_ = a.nrows();
  d.ncols_ = a.ncols();
  d.grid_ = grid;
  d.row_perm_ = row_perm;
  d.col_perm_ = col_perm;
  d.row_off_ = even_splits(a.nrows(), grid.rows);
  d.col_off_ = even_splits(a.ncols(), grid.cols);

  auto owner = [](std::span<const index_t> off, index_t p) {
    const auto it = std::upper_bound(off.begin(), off.end(), p);
    return static_cast<index_t>(it - off.begin()) - 1;
  };
  std::vector<std::vector<Triplet<E>>> parts(static_cast<std::size_t>(grid.rows * grid.cols));
  for (index_t i = 0; i < a.nrows(); ++i) {
    const index_t pi = row_perm(i);
    const index_t bi = owner(d.row_off_, pi);
    const index_t li = pi - d.row_off_[static_cast<std::size_t>(bi)];
    const auto cols = a.row_cols(i);
    const auto vals = a.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const index_t pj = col_perm(cols[k]);
      const index_t bj = owner(d.col_off_, pj);
      parts[static_cast<std::size_t>(bi * grid.cols + bj)].push_back(
          {li, pj - d.col_off_[static_cast<std::size_t>(bj)], vals[k]});
    }
  }
  d.blocks_.reserve(parts.size());
  for (index_t bi = 0; bi < grid.rows; ++bi) {
    for (index_t bj = 0; bj < grid.cols; ++bj) {
      const auto rows = d.row_off_[static_cast<std::size_t>(bi) + 1] - d.row_off_[static_cast<std::size_t>(bi)];
      const auto cols = d.col_off_[static_cast<std::size_t>(bj) + 1] - d.col_off_[static_cast<std::size_t>(bj)];
      d.blocks_.push_back(SparseMatrix<E>::from_triplets(
          rows, cols, std::move(parts[static_cast<std::size_t>(bi * grid.cols + bj)]), Zeros::keep));
    }
  }
  return d;
}

/// Square-matrix form: the same permutation relabels rows and columns.
template <class E>
DistMatrix<E> block_partition(const SparseMatrix<E>& a, GridShape grid, const Permutation& perm) {
  return block_partition(a, grid, perm, perm);
}

template <class E>
DistMatrix<E> block_partition(const SparseMatrix<E>& a, GridShape grid) {
  return block_partition(a, grid, Permutation::identity(a.nrows()), Permutation::identity(a.ncols()));
}

/// How a level's matrices are laid out. An empty permutation means identity.
struct Distribution {
  GridShape grid;
  Permutation perm;

  template <class E>
  DistMatrix<E> apply(const SparseMatrix<E>& a) const {
    if (perm.empty() || a.nrows() != a.ncols()) return block_partition(a, grid);
    return block_partition(a, grid, perm);
  }
};

/// out_i = reduce over stored A_ij of combine(A_ij, v_j), starting from the
/// identity. Single-block kernel.
template <class E, class VIn, class SR>
  requires Semiring<SR, E, VIn>
std::vector<typename SR::value_type> spmv_semiring(const SparseMatrix<E>& a, std::span<const VIn> v,
                                                   const SR& sr) {
  if (static_cast<index_t>(v.size()) != a.ncols()) {
    throw std::invalid_argument("spmv_semiring: matrix has " + std::to_string(a.ncols()) +
                                " columns, vector has " + std::to_string(v.size()));
  }
  std::vector<typename SR::value_type> out(static_cast<std::size_t>(a.nrows()), sr.identity());
  const auto cols = a.col_idx();
  const auto vals = a.values();
  for (index_t i = 0; i < a.nrows(); ++i) {
    auto acc = sr.identity();
    for (auto k = a.row_begin(i); k < a.row_end(i); ++k) {
      acc = sr.reduce(acc, sr.combine(vals[static_cast<std::size_t>(k)],
                                      v[static_cast<std::size_t>(cols[static_cast<std::size_t>(k)])]));
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

/// Distributed form. Block rows run in parallel; within a block row, blocks are
/// folded left to right. Results match the single-block kernel exactly for
/// any reduce that is exact (min, max, discrete payloads) and up to rounding
/// for floating sums.
template <class E, class VIn, class SR>
  requires Semiring<SR, E, VIn>
std::vector<typename SR::value_type> spmv_semiring(const DistMatrix<E>& a, std::span<const VIn> v,
                                                   const SR& sr) {
  if (static_cast<index_t>(v.size()) != a.ncols()) {
    throw std::invalid_argument("spmv_semiring: matrix has " + std::to_string(a.ncols()) +
                                " columns, vector has " + std::to_string(v.size()));
  }
  using VOut = typename SR::value_type;
  std::vector<VIn> permuted(v.size());
  for (index_t k = 0; k < a.ncols(); ++k) {
    permuted[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(a.col_perm().inverse(k))];
  }
  std::vector<VOut> out(static_cast<std::size_t>(a.nrows()), sr.identity());
  const auto grid = a.grid();
  const auto roff = a.row_offsets();
  const auto coff = a.col_offsets();
  parallel_for(grid.rows, [&](index_t bi) {
    const index_t r0 = roff[static_cast<std::size_t>(bi)];
    const index_t r1 = roff[static_cast<std::size_t>(bi) + 1];
    std::vector<VOut> acc(static_cast<std::size_t>(r1 - r0), sr.identity());
    for (index_t bj = 0; bj < grid.cols; ++bj) {
      const auto& blk = a.block(bi, bj);
      const auto local = std::span<const VIn>(permuted).subspan(
          static_cast<std::size_t>(coff[static_cast<std::size_t>(bj)]),
          static_cast<std::size_t>(blk.ncols()));
      const auto cols = blk.col_idx();
      const auto vals = blk.values();
      for (index_t r = 0; r < blk.nrows(); ++r) {
        auto& slot = acc[static_cast<std::size_t>(r)];
        for (auto k = blk.row_begin(r); k < blk.row_end(r); ++k) {
          slot = sr.reduce(slot, sr.combine(vals[static_cast<std::size_t>(k)],
                                            local[static_cast<std::size_t>(cols[static_cast<std::size_t>(k)])]));
        }
      }
    }
    for (index_t r = r0; r < r1; ++r) {
      out[static_cast<std::size_t>(a.row_perm().inverse(r))] = acc[static_cast<std::size_t>(r - r0)];
    }
  });
  return out;
}

}  // namespace glap

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "glap/types.hpp"

namespace glap {

enum class WorkKind : std::size_t {
  residual = 0,
  smoother,
  restriction,
  prolongation,
  coarse_solve,
  matvec,
  vector_op,
};
inline constexpr std::size_t kWorkKinds = 7;

/// Work accounting in units of one fine-level residual, i.e. nnz(L_0) multiply
/// adds. Every tally is a deterministic function of operator sizes, so two
/// identical solves report identical work.
class WorkCounter {
 public:
  explicit WorkCounter(index_t fine_nnz);

  /// Records one application touching `nnz_applied` stored entries on `level`.
  void add(index_t level, WorkKind kind, double nnz_applied);
  /// `count` vector operations of length n.
  void add_vector_ops(index_t level, index_t count, index_t n) {
    add(level, WorkKind::vector_op, static_cast<double>(count) * static_cast<double>(n));
  }
  void count_coarse_visit() noexcept { ++coarse_visits_; }

  double total() const noexcept { return total_; }
  double level_total(index_t level) const;
  double kind_total(WorkKind kind) const;
  double at(index_t level, WorkKind kind) const;
  index_t levels() const noexcept { return static_cast<index_t>(tally_.size()); }
  index_t coarse_visits() const noexcept { return coarse_visits_; }
  double unit() const noexcept { return unit_; }

 private:
  double unit_;
  double total_ = 0.0;
  index_t coarse_visits_ = 0;
  std::vector<std::array<double, kWorkKinds>> tally_;
};

}  // namespace glap

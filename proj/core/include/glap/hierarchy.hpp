#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "glap/aggregation.hpp"
#include "glap/dist_matrix.hpp"
#include "glap/elimination.hpp"
#include "glap/smoother.hpp"

namespace glap {

enum class CycleKind { v, k };

std::string to_string(CycleKind c);
/// Accepts "v"/"V" and "k"/"K". Throws std::invalid_argument otherwise.
CycleKind parse_cycle(std::string_view text);

struct SolverParams {
  double tol = 1e-8;
  CycleKind cycle = CycleKind::v;
  int cheby_degree = 2;
  int pre_sweeps = 1;
  int post_sweeps = 1;
  double elim_gate = 0.05;
  index_t elim_max_degree = 4;
  int elim_rounds = 1;
  index_t vote_threshold = 8;
  int voting_rounds = 10;
  index_t max_levels = 40;
  index_t coarse_nnz = 1000;
  index_t test_vectors = 4;
  int test_sweeps = 3;
  double test_omega = 2.0 / 3.0;
  int lanczos_iters = 10;
  double cheby_lo = 0.3;
  double cheby_hi = 1.1;
  bool jacobi = true;
  int kcycle_inner = 2;
  int max_iterations = 500;
  /// Largest coarsest operator factored densely; bigger ones (only reachable
  /// after a stall) are handled by smoothing sweeps instead.
  index_t dense_limit = 4000;
  int coarse_sweeps = 4;
  std::uint64_t seed = 0;
  GridShape grid{1, 1};
  /// Random symmetric permutation of the finest operator's layout.
  bool randomize = true;

  /// Throws std::invalid_argument on a nonpositive count or tol outside (0, 1).
  void validate() const;
};

struct AggregationLevel {
  Assignment assignment;
  Matrix restriction;
  Matrix prolongation;
  Matrix coarse;
  SmootherData smoother;
};

using Level = std::variant<EliminationLevel, AggregationLevel>;

/// Solver for the coarsest operator. Small operators are grounded (last
/// row and column replaced by the identity), Cholesky factored, and their
/// solutions shifted to zero mean. Larger ones fall back to Chebyshev sweeps.
class CoarseSolver {
 public:
  CoarseSolver() = default;
  static CoarseSolver dense(const Matrix& l);
  static CoarseSolver sweeps(SmootherData smoother, int count);

  /// x = approximate L^+ b (exact for the dense variant on connected L).
  void solve(const Matrix& l, std::span<const double> b, std::span<double> x) const;
  bool is_dense() const noexcept { return dense_ != nullptr; }
  /// Stored-entry equivalents touched by one solve, for work accounting.
  double work_nnz(const Matrix& l) const;

 private:
  struct Dense;
  std::shared_ptr<const Dense> dense_;
  SmootherData smoother_;
  int sweeps_ = 0;
};

struct LevelInfo {
  std::string kind;  // "fine", "elimination", "aggregation"
  index_t n = 0;
  index_t nnz = 0;
  friend bool operator==(const LevelInfo&, const LevelInfo&) = default;
};

/// Operators L_0 ... L_k: the fine operator followed by levels[i].coarse.
/// Immutable once built; solves only read it.
struct Hierarchy {
  SolverParams params;
  Matrix fine;
  std::vector<Level> levels;
  CoarseSolver coarsest;
  bool stalled = false;
  std::vector<std::string> warnings;
  double setup_seconds = 0.0;

  index_t num_operators() const noexcept { return static_cast<index_t>(levels.size()) + 1; }
  /// L_l for 0 <= l <= levels.size().
  const Matrix& op(index_t l) const;
  const Matrix& coarsest_op() const { return op(static_cast<index_t>(levels.size())); }
  index_t aggregation_levels() const;
  std::vector<LevelInfo> table() const;
  /// Sum of nnz(L_l) over all operators divided by nnz(L_0).
  double operator_complexity() const;
};

/// Builds the hierarchy. Each step tries elimination first (kept when more
/// than elim_gate * n vertices go), then aggregates. Stops once the operator
/// has at most coarse_nnz entries, at max_levels operators, or after two
/// consecutive aggregation attempts that fail to coarsen.
///
/// Throws GraphError if L is not a Laplacian or is disconnected.
Hierarchy setup_hierarchy(const Matrix& l, const SolverParams& params = {});

}  // namespace glap

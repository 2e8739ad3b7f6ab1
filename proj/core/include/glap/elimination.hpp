#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "glap/dist_matrix.hpp"
#include "glap/permutation.hpp"
#include "glap/sparse_matrix.hpp"
#include "glap/vector_ops.hpp"

namespace glap {

/// Vertex id hash used to rank elimination candidates: mix64(i + golden gamma).
/// Bijective on 64-bit words, hence injective on vertex ids.
std::uint64_t hash64(index_t i) noexcept;

using VertexHash = std::function<std::uint64_t(index_t)>;

/// A candidate vertex with its precomputed hash, or the empty candidate
/// (index -1) that loses every comparison.
struct ElimCandidate {
  index_t index = -1;
  std::uint64_t hash = std::numeric_limits<std::uint64_t>::max();

  bool empty() const noexcept { return index < 0; }
  friend bool operator==(const ElimCandidate&, const ElimCandidate&) = default;
};

/// Passes the candidate through on any stored entry and keeps the one with
/// the smallest (hash, index). Ties on hash fall back to the index, so the
/// reduction is commutative even if two hashes collide.
struct MinHashSemiring {
  using value_type = ElimCandidate;
  static ElimCandidate identity() noexcept { return {}; }
  static ElimCandidate combine(double a, const ElimCandidate& c) noexcept {
    return a != 0.0 ? c : ElimCandidate{};
  }
  static ElimCandidate reduce(const ElimCandidate& x, const ElimCandidate& y) noexcept {
    if (x.empty()) return y;
    if (y.empty()) return x;
    if (x.hash != y.hash) return x.hash < y.hash ? x : y;
    return x.index <= y.index ? x : y;
  }
};

struct EliminationOptions {
  index_t max_degree = 4;
  VertexHash hash = hash64;
};

/// Candidate vector: vertex i if its off-diagonal degree is at most max_degree.
std::vector<ElimCandidate> elimination_candidates(const Matrix& l, const EliminationOptions& opts = {});

/// z = L (min-hash) candidates. Since L stores its diagonal, the neighborhood
/// of each vertex includes the vertex itself.
std::vector<ElimCandidate> elimination_choice(const DistMatrix<double>& l,
                                              std::span<const ElimCandidate> candidates);

/// F = { i : z_i = i }, ascending.
std::vector<index_t> select_elimination(const Matrix& l, const EliminationOptions& opts = {},
                                        const Distribution& dist = {});

/// Exact elimination of an independent vertex set F.
///
/// With C the remaining vertices (in increasing order) and F-first ordering,
///   P = order^T [-L_FF^-1 L_FC ; I],   coarse = L_CC - L_FC^T L_FF^-1 L_FC.
struct EliminationLevel {
  index_t n = 0;
  std::vector<index_t> f_vertices;
  std::vector<index_t> c_vertices;
  Permutation order;
  std::vector<double> dinv_ff;
  Matrix l_fc;
  Matrix prolongation;
  Matrix coarse;
};

/// Throws std::invalid_argument if two vertices of F are adjacent or an index
/// is out of range, std::domain_error if some L_ff is not positive.
EliminationLevel build_elimination_level(const Matrix& l, std::span<const index_t> f);

/// P^T b.
Vector elim_restrict(const EliminationLevel& level, std::span<const double> b);
/// P x_next + Fsmooth(b): C entries copy x_next, F entries are
/// L_ff^-1 (b_f - L_fC x_next).
Vector elim_prolong(const EliminationLevel& level, std::span<const double> x_next,
                    std::span<const double> b);

}  // namespace glap

#pragma once

#include <cstdint>
#include <vector>

#include "glap/dist_matrix.hpp"
#include "glap/sparse_matrix.hpp"

namespace glap {

/// Ordered Decided < Undecided < Seed; a higher state wins a reduction.
enum class AggState : std::uint8_t { decided = 0, undecided = 1, seed = 2 };

/// Per-vertex voting state. For Seed and Undecided the index is the vertex
/// itself; for Decided it is the seed the vertex joined.
struct VertexStatus {
  AggState state = AggState::undecided;
  index_t index = -1;

  static VertexStatus undecided(index_t i) noexcept { return {AggState::undecided, i}; }
  static VertexStatus seed(index_t i) noexcept { return {AggState::seed, i}; }
  static VertexStatus decided(index_t s) noexcept { return {AggState::decided, s}; }

  friend bool operator==(const VertexStatus&, const VertexStatus&) = default;
};

/// (state, index, weight) produced for each stored strength entry.
struct AggMessage {
  AggState state = AggState::decided;
  index_t index = -1;
  double weight = 0.0;

  static AggMessage null() noexcept { return {}; }
  friend bool operator==(const AggMessage&, const AggMessage&) = default;
};

/// The neighbor-choice product. Higher state wins, then larger weight, then
/// the smaller vertex index; the null message (index -1) loses every tie.
/// This order is total, so reduce is associative and commutative.
struct AggregationSemiring {
  using value_type = AggMessage;
  static AggMessage identity() noexcept { return AggMessage::null(); }
  static AggMessage combine(double w, const VertexStatus& s) noexcept {
    return w != 0.0 ? AggMessage{s.state, s.index, w} : AggMessage::null();
  }
  static AggMessage reduce(const AggMessage& a, const AggMessage& b) noexcept {
    if (a.state != b.state) return a.state > b.state ? a : b;
    if (a.weight != b.weight) return a.weight > b.weight ? a : b;
    return static_cast<std::uint64_t>(a.index) <= static_cast<std::uint64_t>(b.index) ? a : b;
  }
};

struct AggregationState {
  std::vector<VertexStatus> status;
  std::vector<index_t> votes;

  static AggregationState initial(index_t n);
  friend bool operator==(const AggregationState&, const AggregationState&) = default;
};

struct AggregationOptions {
  int rounds = 10;
  index_t vote_threshold = 8;
};

/// Drops entries below `factor`.
Matrix filter_strength(const Matrix& s, double factor);

/// Filter factor for voting round `iter` (1-based): 0.5^iter.
double round_filter_factor(int iter);

/// One voting round on an already filtered strength matrix. Only Undecided
/// vertices change: a Seed neighbor makes them Decided, otherwise an
/// Undecided neighbor receives their vote. Votes accumulate across rounds and
/// an Undecided vertex with at least `threshold` votes becomes a Seed.
AggregationState aggregation_step(const DistMatrix<double>& s_filt, const AggregationState& state,
                                  index_t threshold);

struct Assignment {
  std::vector<index_t> agg_of;
  std::vector<index_t> seed_of;

  index_t count() const noexcept { return static_cast<index_t>(seed_of.size()); }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Aggregates numbered by increasing seed index. Decided vertices join their
/// seed; vertices left Undecided become singletons.
Assignment assignment_from_state(const AggregationState& state);

Assignment aggregate(const Matrix& s, const AggregationOptions& opts = {},
                     const Distribution& dist = {});

/// m x n 0/1 matrix with R(agg_of[j], j) = 1.
Matrix build_restriction(const Assignment& a);

/// R L P for a Laplacian L. When square, the off-diagonal part is symmetrized
/// as (A + A^T) / 2 and the diagonal is set to minus the off-diagonal row sum,
/// which removes rounding from both symmetry and the zero row sums. Exact
/// zeros are dropped.
Matrix galerkin_coarse(const Matrix& r, const Matrix& l, const Matrix& p);

}  // namespace glap

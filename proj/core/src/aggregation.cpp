#include "glap/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "glap/laplacian.hpp"

namespace glap {

AggregationState AggregationState::initial(index_t n) {
  AggregationState s;
  s.status.reserve(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) s.status.push_back(VertexStatus::undecided(i));
  s.votes.assign(static_cast<std::size_t>(n), 0);
  return s;
}

Matrix filter_strength(const Matrix& s, double factor) {
  return s.filter([factor](index_t, index_t, double v) { return !(v < factor); });
}

double round_filter_factor(int iter) { return std::ldexp(1.0, -iter); }

AggregationState aggregation_step(const DistMatrix<double>& s_filt, const AggregationState& state,
                                  index_t threshold) {
  const auto n = static_cast<index_t>(state.status.size());
  if (s_filt.nrows() != n || s_filt.ncols() != n || static_cast<index_t>(state.votes.size()) != n) {
    throw std::invalid_argument("aggregation_step: size mismatch");
  }
  const auto d = spmv_semiring(s_filt, std::span<const VertexStatus>(state.status), AggregationSemiring{});

  AggregationState next = state;
  std::vector<index_t> ballots;
  for (index_t i = 0; i < n; ++i) {
    if (state.status[static_cast<std::size_t>(i)].state != AggState::undecided) continue;
    const auto& msg = d[static_cast<std::size_t>(i)];
    if (msg.state == AggState::seed) {
      next.status[static_cast<std::size_t>(i)] = VertexStatus::decided(msg.index);
    } else if (msg.state == AggState::undecided) {
      ballots.push_back(msg.index);
    }
  }
  // Sparse tally: reduce_by_key(+) over the ballot targets.
  std::sort(ballots.begin(), ballots.end());
  for (std::size_t k = 0; k < ballots.size();) {
    std::size_t e = k;
    while (e < ballots.size() && ballots[e] == ballots[k]) ++e;
    next.votes[static_cast<std::size_t>(ballots[k])] += static_cast<index_t>(e - k);
    k = e;
  }
  for (index_t i = 0; i < n; ++i) {
    auto& st = next.status[static_cast<std::size_t>(i)];
    if (st.state == AggState::undecided && next.votes[static_cast<std::size_t>(i)] >= threshold) {
      st = VertexStatus::seed(i);
    }
  }
  return next;
}

Assignment assignment_from_state(const AggregationState& state) {
  const auto n = static_cast<index_t>(state.status.size());
  std::vector<index_t> root(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) {
    const auto& st = state.status[static_cast<std::size_t>(i)];
    root[static_cast<std::size_t>(i)] = st.state == AggState::decided ? st.index : i;
  }
  Assignment a;
  std::vector<index_t> id(static_cast<std::size_t>(n), -1);
  for (index_t i = 0; i < n; ++i) {
    if (root[static_cast<std::size_t>(i)] == i) {
      id[static_cast<std::size_t>(i)] = static_cast<index_t>(a.seed_of.size());
      a.seed_of.push_back(i);
    }
  }
  a.agg_of.resize(static_cast<std::size_t>(n));
  for (index_t i = 0; i < n; ++i) {
    const auto g = id[static_cast<std::size_t>(root[static_cast<std::size_t>(i)])];
    if (g < 0) throw std::logic_error("assignment_from_state: vertex joined a non-seed");
    a.agg_of[static_cast<std::size_t>(i)] = g;
  }
  return a;
}

Assignment aggregate(const Matrix& s, const AggregationOptions& opts, const Distribution& dist) {
  auto state = AggregationState::initial(s.nrows());
  for (int iter = 1; iter <= opts.rounds; ++iter) {
    const auto filtered = dist.apply(filter_strength(s, round_filter_factor(iter)));
    state = aggregation_step(filtered, state, opts.vote_threshold);
  }
  return assignment_from_state(state);
}

Matrix build_restriction(const Assignment& a) {
  const auto n = static_cast<index_t>(a.agg_of.size());
  std::vector<Triplet<double>> t;
  t.reserve(a.agg_of.size());
  for (index_t j = 0; j < n; ++j) t.push_back({a.agg_of[static_cast<std::size_t>(j)], j, 1.0});
  return Matrix::from_triplets(a.count(), n, std::move(t));
}

Matrix galerkin_coarse(const Matrix& r, const Matrix& l, const Matrix& p) {
  if (r.ncols() != l.nrows() || l.ncols() != p.nrows()) {
    throw std::invalid_argument("galerkin_coarse: dimension mismatch");
  }
  const auto c = spgemm(spgemm(r, l), p);
  if (c.nrows() != c.ncols()) return c;
  auto t = c.triplets();
  for (auto& e : t) e.value *= 0.5;
  for (const auto& e : transpose(c).triplets()) t.push_back({e.row, e.col, 0.5 * e.value});
  return laplacian_from_offdiagonal(c.nrows(), std::move(t));
}

}  // namespace glap

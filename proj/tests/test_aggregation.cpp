#include <doctest.h>

#include <algorithm>
#include <functional>

#include "glap/aggregation.hpp"
#include "glap/laplacian.hpp"
#include "glap/permutation.hpp"
#include "glap/strength.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace glap;

namespace {

/// Off-diagonal pattern of the graph with every value set to one.
Matrix unit_strength(const Graph& g) {
  std::vector<Triplet<double>> t;
  for (const auto& e : g.edges) {
    t.push_back({e.u, e.v, 1.0});
    t.push_back({e.v, e.u, 1.0});
  }
  return Matrix::from_triplets(g.n, g.n, std::move(t));
}

DistMatrix<double> dist(const Matrix& s) { return block_partition(s, {1, 1}); }

/// Reference reduction: brute-force scan for the winning neighbor message.
AggMessage brute_force_choice(const Matrix& s, const std::vector<VertexStatus>& st, index_t i) {
  AggMessage best = AggMessage::null();
  for (index_t k = s.row_begin(i); k < s.row_end(i); ++k) {
    const index_t j = s.col_idx()[static_cast<std::size_t>(k)];
    const double w = s.values()[static_cast<std::size_t>(k)];
    const AggMessage m{st[static_cast<std::size_t>(j)].state, st[static_cast<std::size_t>(j)].index, w};
    const auto key = [](const AggMessage& a) {
      return std::make_tuple(static_cast<int>(a.state), a.weight, -a.index);
    };
    if (best.index < 0 || key(m) > key(best)) best = m;
  }
  return best;
}

void check_assignment(const Assignment& a, index_t n) {
  REQUIRE(a.agg_of.size() == static_cast<std::size_t>(n));
  std::vector<int> hit(static_cast<std::size_t>(a.count()), 0);
  for (const index_t v : a.agg_of) {
    REQUIRE(v >= 0);
    REQUIRE(v < a.count());
    hit[static_cast<std::size_t>(v)] = 1;
  }
  CHECK(std::count(hit.begin(), hit.end(), 1) == a.count());
  for (index_t k = 0; k < a.count(); ++k) {
    CHECK(a.agg_of[static_cast<std::size_t>(a.seed_of[static_cast<std::size_t>(k)])] == k);
  }
  CHECK(std::is_sorted(a.seed_of.begin(), a.seed_of.end()));
}

}  // namespace

TEST_CASE("strength filtering") {
  const auto s = Matrix::from_triplets(3, 3, {{0, 1, 1.0}, {1, 0, 0.5}, {1, 2, 0.25}, {2, 1, 0.25}});
  const auto f = filter_strength(s, 0.5);
  CHECK(f == Matrix::from_triplets(3, 3, {{0, 1, 1.0}, {1, 0, 0.5}}));
  CHECK(filter_strength(s, 0.25) == s);
  CHECK(filter_strength(s, 0.1) == s);
  CHECK(round_filter_factor(1) == 0.5);
  CHECK(round_filter_factor(2) == 0.25);
  CHECK(round_filter_factor(10) == doctest::Approx(1.0 / 1024.0));
}

TEST_CASE("message reduction order") {
  const AggMessage seed{AggState::seed, 5, 0.1};
  const AggMessage und{AggState::undecided, 1, 0.9};
  const AggMessage dec{AggState::decided, 0, 1.0};
  CHECK(AggregationSemiring::reduce(seed, und) == seed);
  CHECK(AggregationSemiring::reduce(dec, und) == und);
  const AggMessage a{AggState::undecided, 3, 0.5};
  const AggMessage b{AggState::undecided, 2, 0.5};
  const AggMessage c{AggState::undecided, 9, 0.7};
  CHECK(AggregationSemiring::reduce(a, b) == b);
  CHECK(AggregationSemiring::reduce(b, a) == b);
  CHECK(AggregationSemiring::reduce(a, c) == c);
  const AggMessage zero{AggState::decided, 4, 0.0};
  CHECK(AggregationSemiring::reduce(AggMessage::null(), zero) == zero);
  CHECK(AggregationSemiring::reduce(zero, AggMessage::null()) == zero);
  CHECK(AggregationSemiring::combine(0.0, VertexStatus::seed(2)) == AggMessage::null());
}

TEST_CASE("voting on K3") {
  const auto s = dist(unit_strength(complete_graph(3)));
  auto st = aggregation_step(s, AggregationState::initial(3), 8);
  CHECK(st.votes == std::vector<index_t>{2, 1, 0});
  CHECK(st.status == AggregationState::initial(3).status);
  for (int step = 2; step <= 3; ++step) st = aggregation_step(s, st, 8);
  CHECK(st.status[0] == VertexStatus::undecided(0));
  st = aggregation_step(s, st, 8);
  CHECK(st.votes[0] == 8);
  CHECK(st.status[0] == VertexStatus::seed(0));
  CHECK(st.status[1] == VertexStatus::undecided(1));
  st = aggregation_step(s, st, 8);
  CHECK(st.status[0] == VertexStatus::seed(0));
  CHECK(st.status[1] == VertexStatus::decided(0));
  CHECK(st.status[2] == VertexStatus::decided(0));
}

TEST_CASE("decided vertices are a fixed point") {
  const auto s = dist(unit_strength(complete_graph(4)));
  AggregationState st;
  st.status = {VertexStatus::decided(0), VertexStatus::decided(0), VertexStatus::decided(3),
               VertexStatus::decided(3)};
  st.votes = {1, 2, 3, 4};
  CHECK(aggregation_step(s, st, 8) == st);
}

TEST_CASE("seeds are frozen") {
  const auto s = dist(unit_strength(path_graph(2)));
  AggregationState st;
  st.status = {VertexStatus::seed(0), VertexStatus::seed(1)};
  st.votes = {0, 0};
  CHECK(aggregation_step(s, st, 8) == st);
}

TEST_CASE("aggregate examples") {
  const auto k3 = aggregate(unit_strength(complete_graph(3)));
  CHECK(k3.count() == 1);
  CHECK(k3.seed_of == std::vector<index_t>{0});
  CHECK(k3.agg_of == std::vector<index_t>{0, 0, 0});

  const auto none = aggregate(Matrix(5, 5));
  CHECK(none.count() == 5);
  CHECK(none.agg_of == std::vector<index_t>{0, 1, 2, 3, 4});

  const auto s3 = unit_strength(fixtures::p3());
  auto st = AggregationState::initial(3);
  for (int r = 1; r <= 4; ++r) st = aggregation_step(dist(s3), st, 8);
  CHECK(st.status[1] == VertexStatus::seed(1));
  const auto p3 = aggregate(s3);
  CHECK(p3.count() == 1);
  CHECK(p3.seed_of == std::vector<index_t>{1});

  const auto short_run = aggregate(s3, {3, 8});
  CHECK(short_run.count() == 3);
}

TEST_CASE("assignment from state numbers aggregates by seed") {
  AggregationState st;
  st.status = {VertexStatus::decided(3), VertexStatus::undecided(1), VertexStatus::seed(2),
               VertexStatus::seed(3), VertexStatus::decided(2)};
  st.votes.assign(5, 0);
  const auto a = assignment_from_state(st);
  CHECK(a.seed_of == std::vector<index_t>{1, 2, 3});
  CHECK(a.agg_of == std::vector<index_t>{2, 0, 1, 2, 1});
}

TEST_CASE("restriction examples") {
  const auto r = build_restriction(Assignment{{0, 0, 1}, {0, 2}});
  CHECK(oracle::dense(r) == (Eigen::MatrixXd(2, 3) << 1, 1, 0, 0, 0, 1).finished());
  CHECK(build_restriction(Assignment{{0, 1, 2}, {0, 1, 2}}) == Matrix::identity(3));
  CHECK(oracle::dense(build_restriction(Assignment{{0, 0, 0}, {0}})) == Eigen::MatrixXd::Ones(1, 3));
}

TEST_CASE("Galerkin examples") {
  const auto l = laplacian_from_graph(fixtures::p3());
  const auto r = build_restriction(Assignment{{0, 0, 1}, {0, 2}});
  const auto c = galerkin_coarse(r, l, transpose(r));
  CHECK(c == Matrix::from_triplets(2, 2, {{0, 0, 1.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 1.0}}));
  CHECK(galerkin_coarse(Matrix::identity(3), l, Matrix::identity(3)) == l);
  const auto one = build_restriction(Assignment{{0, 0, 0}, {0}});
  const auto z = galerkin_coarse(one, l, transpose(one));
  CHECK(z.nrows() == 1);
  CHECK(z.nnz() == 0);
  CHECK_THROWS_AS(galerkin_coarse(r, l, r), std::invalid_argument);
}

TEST_CASE("aggregation properties on the random corpus") {
  for (const auto& g : fixtures::random_corpus()) {
    const auto l = laplacian_from_graph(g);
    const auto s = strength_matrix(l, {.seed = 11});
    const auto a = aggregate(s);
    check_assignment(a, g.n);
    bool strong = false;
    for (const double v : s.values()) strong = strong || v >= 0.5;
    if (strong) CHECK(a.count() < g.n);

    const auto r = build_restriction(a);
    for (index_t j = 0; j < g.n; ++j) {
      CHECK(oracle::dense(r).col(j).sum() == 1.0);
    }
    const auto c = galerkin_coarse(r, l, transpose(r));
    CHECK(validate_laplacian(c).empty());
    const Eigen::MatrixXd rd = oracle::dense(r);
    CHECK(oracle::max_abs_diff(oracle::dense(c), rd * oracle::dense(l) * rd.transpose()) <=
          1e-12 * max_abs(l));

    CHECK(aggregate(s) == a);
    std::uint64_t pseed = 3;
    for (const GridShape grid : {GridShape{1, 3}, GridShape{2, 2}, GridShape{3, 2}}) {
      CHECK(aggregate(s, {}, Distribution{grid, {}}) == a);
      CHECK(aggregate(s, {}, Distribution{grid, random_permutation(g.n, pseed++)}) == a);
    }
  }
}

TEST_CASE("one voting step matches a brute-force scan") {
  for (const auto& g : fixtures::random_corpus(10, 5)) {
    const auto l = laplacian_from_graph(g);
    const auto s = strength_matrix(l, {.seed = 2});
    auto st = AggregationState::initial(g.n);
    // Seed a few vertices so all three states appear.
    for (index_t i = 0; i < g.n; i += 7) st.status[static_cast<std::size_t>(i)] = VertexStatus::seed(i);
    const auto d = spmv_semiring(s, std::span<const VertexStatus>(st.status), AggregationSemiring{});
    for (index_t i = 0; i < g.n; ++i) {
      CHECK(d[static_cast<std::size_t>(i)] == brute_force_choice(s, st.status, i));
    }
    const auto next = aggregation_step(dist(s), st, 8);
    for (index_t i = 0; i < g.n; ++i) {
      const auto& di = d[static_cast<std::size_t>(i)];
      if (st.status[static_cast<std::size_t>(i)].state == AggState::undecided &&
          di.state == AggState::seed) {
        CHECK(next.status[static_cast<std::size_t>(i)] == VertexStatus::decided(di.index));
      }
    }
  }
}

TEST_CASE("arbitrary 0/1 aggregations keep Laplacian structure") {
  SplitMix64 rng(5);
  for (const auto& g : fixtures::random_corpus(20, 99)) {
    const auto l = laplacian_from_graph(g);
    const index_t m = 1 + static_cast<index_t>(rng.below(static_cast<std::uint64_t>(g.n)));
    Assignment a;
    a.agg_of.resize(static_cast<std::size_t>(g.n));
    for (index_t k = 0; k < m; ++k) a.agg_of[static_cast<std::size_t>(k)] = k;
    for (index_t i = m; i < g.n; ++i) {
      a.agg_of[static_cast<std::size_t>(i)] = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(m)));
    }
    for (index_t k = 0; k < m; ++k) a.seed_of.push_back(k);
    const auto r = build_restriction(a);
    CHECK(validate_laplacian(galerkin_coarse(r, l, transpose(r))).empty());
  }
}

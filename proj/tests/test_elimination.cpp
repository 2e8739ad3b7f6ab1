#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "glap/elimination.hpp"
#include "glap/laplacian.hpp"
#include "glap/permutation.hpp"
#include "glap/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace glap;

namespace {

Matrix from(const Graph& g) { return laplacian_from_graph(g); }

EliminationOptions with_hash(std::vector<std::uint64_t> h) {
  EliminationOptions o;
  o.hash = [h = std::move(h)](index_t i) { return h[static_cast<std::size_t>(i)]; };
  return o;
}

EliminationOptions identity_hash() {
  EliminationOptions o;
  o.hash = [](index_t i) { return static_cast<std::uint64_t>(i); };
  return o;
}

// Exact two-level solve: eliminate F, solve the Schur complement by its
// pseudo-inverse, prolong.
Vector two_level_solve(const Matrix& l, const EliminationLevel& lev, std::span<const double> b) {
  const Vector bc = elim_restrict(lev, b);
  const Vector xc = oracle::min_norm_solve(lev.coarse, bc);
  return elim_prolong(lev, xc, b);
}

}  // namespace

TEST_CASE("hash64 is deterministic and injective on vertex ids") {
  CHECK(hash64(12345) == hash64(12345));
  CHECK(hash64(0) != hash64(1));
  std::vector<std::uint64_t> h(1000001);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = hash64(static_cast<index_t>(i));
  std::sort(h.begin(), h.end());
  CHECK(std::adjacent_find(h.begin(), h.end()) == h.end());
}

TEST_CASE("the empty candidate loses every comparison") {
  const ElimCandidate none;
  const ElimCandidate worst{7, UINT64_MAX};
  CHECK(MinHashSemiring::reduce(none, worst) == worst);
  CHECK(MinHashSemiring::reduce(worst, none) == worst);
  CHECK(MinHashSemiring::reduce(none, none).empty());
  CHECK(MinHashSemiring::combine(0.0, worst).empty());
}

TEST_CASE("selection on small chains and stars") {
  const auto p3 = from(fixtures::p3());
  CHECK(select_elimination(p3, identity_hash()) == std::vector<index_t>{0});
  const auto z = elimination_choice(block_partition(p3, {1, 1}), elimination_candidates(p3, identity_hash()));
  CHECK(z[0].index == 0);
  CHECK(z[1].index == 0);
  CHECK(z[2].index == 1);

  const auto p4 = from(path_graph(4));
  CHECK(select_elimination(p4, identity_hash()) == std::vector<index_t>{0});
  CHECK(select_elimination(p4, with_hash({0, 5, 1, 7})) == std::vector<index_t>{0, 2});

  const auto star = from(fixtures::star6());
  CHECK(select_elimination(star, identity_hash()) == std::vector<index_t>{1, 2, 3, 4, 5});
}

TEST_CASE("degree threshold is configurable and counts off-diagonals") {
  const auto star = from(star_graph(4));
  CHECK(elimination_candidates(star)[0].index == 0);
  EliminationOptions o = identity_hash();
  o.max_degree = 3;
  CHECK(elimination_candidates(star, o)[0].empty());
  CHECK(select_elimination(star, o) == std::vector<index_t>{1, 2, 3, 4});
}

TEST_CASE("hash collisions fall back to the vertex index") {
  const auto p4 = from(path_graph(4));
  CHECK(select_elimination(p4, with_hash({3, 3, 3, 3})) == std::vector<index_t>{0});
}

TEST_CASE("elimination level on P3") {
  const auto lev = build_elimination_level(from(fixtures::p3()), std::vector<index_t>{0});
  CHECK(lev.f_vertices == std::vector<index_t>{0});
  CHECK(lev.c_vertices == std::vector<index_t>{1, 2});
  CHECK(lev.dinv_ff == std::vector<double>{1.0});
  CHECK(lev.l_fc == Matrix::from_triplets(1, 2, {{0, 0, -1.0}}));
  CHECK(lev.coarse == Matrix::from_triplets(2, 2, {{0, 0, 1.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 1.0}}));
  CHECK(lev.order(0) == 0);
  CHECK(lev.order(1) == 1);
  CHECK(lev.order(2) == 2);
}

TEST_CASE("elimination level on STAR6") {
  const std::vector<index_t> leaves{1, 2, 3, 4, 5};
  const auto lev = build_elimination_level(from(fixtures::star6()), leaves);
  CHECK(lev.coarse.nrows() == 1);
  CHECK(lev.coarse.at(0, 0) == 0.0);
  CHECK(validate_laplacian(lev.coarse).empty());
}

TEST_CASE("empty F is the identity level") {
  const auto l = from(grid2d_graph(3, 4));
  const auto lev = build_elimination_level(l, std::vector<index_t>{});
  CHECK(lev.coarse == l);
  CHECK(lev.prolongation == Matrix::identity(l.nrows()));
}

TEST_CASE("invalid F is rejected") {
  const auto l = from(fixtures::p3());
  CHECK_THROWS_AS(build_elimination_level(l, std::vector<index_t>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_elimination_level(l, std::vector<index_t>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_elimination_level(l, std::vector<index_t>{3}), std::invalid_argument);
  const auto iso = from(Graph{3, {{1, 2, 1.0}}});
  CHECK_THROWS_AS(build_elimination_level(iso, std::vector<index_t>{0}), std::domain_error);
}

TEST_CASE("restriction on P3") {
  const auto lev = build_elimination_level(from(fixtures::p3()), std::vector<index_t>{0});
  CHECK(elim_restrict(lev, std::vector<double>{1.0, -2.0, 1.0}) == Vector{-1.0, 1.0});
  CHECK(elim_restrict(lev, std::vector<double>{0.0, 0.0, 0.0}) == Vector{0.0, 0.0});
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(3);
  const Eigen::VectorXd ref = oracle::dense(lev.prolongation).transpose() * ones;
  CHECK(oracle::to_eigen(elim_restrict(lev, std::vector<double>{1.0, 1.0, 1.0})) == ref);
  CHECK_THROWS_AS(elim_restrict(lev, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("prolongation on P3 and STAR6") {
  const auto l = from(fixtures::p3());
  const auto lev = build_elimination_level(l, std::vector<index_t>{0});
  const std::vector<double> b{1.0, 0.0, -1.0};
  const Vector x = two_level_solve(l, lev, b);
  CHECK(oracle::shifted_distance(x, oracle::min_norm_solve(l, b)) <= 1e-12);
  CHECK(elim_prolong(lev, Vector{0.0, 0.0}, std::vector<double>{0.0, 0.0, 0.0}) == Vector{0.0, 0.0, 0.0});
  const Vector xc{3.0, -2.0};
  const Vector xp = elim_prolong(lev, xc, b);
  CHECK(xp[1] == 3.0);
  CHECK(xp[2] == -2.0);
  CHECK(xp[0] == doctest::Approx(1.0 * (b[0] + 1.0 * xc[0])));
  CHECK_THROWS_AS(elim_prolong(lev, Vector{1.0}, b), std::invalid_argument);

  const auto star = from(fixtures::star6());
  const auto slev = build_elimination_level(star, std::vector<index_t>{1, 2, 3, 4, 5});
  const std::vector<double> sb{5.0, -2.0, -1.0, 0.0, -1.0, -1.0};
  const Vector sx = elim_prolong(slev, Vector{0.0}, sb);
  Vector r(6);
  residual(star, sb, sx, r);
  CHECK(norm2(r) <= 1e-12);
}

TEST_CASE("elimination invariants on the random corpus") {
  SplitMix64 rng(77);
  for (const auto& g : fixtures::random_corpus()) {
    const auto l = from(g);
    const auto f = select_elimination(l);
    // Independence and minimality.
    for (const index_t a : f) {
      for (const index_t b : f) {
        if (a != b) CHECK_FALSE(l.contains(a, b));
      }
    }
    CHECK(f == oracle::brute_force_selection(l, 4, hash64));
    const auto lev = build_elimination_level(l, f);
    CHECK(validate_laplacian(lev.coarse).empty());
    CHECK(oracle::max_abs_diff(oracle::dense(lev.coarse), oracle::dense_schur(l, f)) <= 1e-12 * max_abs(l));
    // P 1 = 1: eliminated rows of -L_FF^-1 L_FC sum to one.
    const Vector p1 = multiply(lev.prolongation, Vector(static_cast<std::size_t>(lev.c_vertices.size()), 1.0));
    for (const double v : p1) CHECK(std::abs(v - 1.0) <= 1e-12);
    // Exactness of the two-level solve.
    Vector b(static_cast<std::size_t>(l.nrows()));
    for (auto& v : b) v = rng.normal();
    remove_mean(b);
    const Vector x = two_level_solve(l, lev, b);
    Vector r(b.size());
    residual(l, b, x, r);
    CHECK(norm2(r) <= 1e-10 * norm2(b));
    CHECK(oracle::shifted_distance(x, oracle::min_norm_solve(l, b)) <= 1e-9);
  }
}

TEST_CASE("selection is identical on every grid and layout") {
  std::uint64_t seed = 9;
  for (const auto& g : fixtures::random_corpus()) {
    const auto l = from(g);
    const auto ref = select_elimination(l);
    for (const GridShape grid : {GridShape{1, 1}, GridShape{1, 4}, GridShape{2, 2}, GridShape{3, 2}}) {
      CHECK(select_elimination(l, {}, Distribution{grid, {}}) == ref);
      CHECK(select_elimination(l, {}, Distribution{grid, random_permutation(l.nrows(), seed++)}) == ref);
    }
  }
}

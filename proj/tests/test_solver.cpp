#include <doctest.h>

#include <cmath>

#include "glap/cycle.hpp"
#include "glap/krylov.hpp"
#include "glap/laplacian.hpp"
#include "glap/smoother.hpp"
#include "glap/vector_ops.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace glap;

namespace {

Matrix from(const Graph& g) { return laplacian_from_graph(g); }

SolverParams small_coarse() {
  SolverParams p;
  p.coarse_nnz = 1;
  return p;
}

double energy(const Matrix& l, std::span<const double> e) {
  const Vector le = multiply(l, e);
  return dot(e, le);
}

/// Small fixtures with a multilevel hierarchy forced by a tiny coarse limit.
std::vector<fixtures::Named> small_fixtures() {
  std::vector<fixtures::Named> out;
  for (auto& f : fixtures::distribution_fixtures()) {
    if (f.graph.n <= 200) out.push_back(std::move(f));
  }
  for (std::size_t k = 0; auto& g : fixtures::random_corpus(8, 31)) {
    out.push_back({"random_" + std::to_string(k++), std::move(g)});
  }
  return out;
}

}  // namespace

TEST_CASE("Lanczos estimate examples") {
  const auto k2 = from(path_graph(2));
  const auto e2 = estimate_lmax(k2, 10, 1);
  CHECK(e2.value >= 1.9);
  CHECK(e2.value <= 2.0 + 1e-12);
  const auto zero = estimate_lmax(Matrix(1, 1), 10, 1);
  CHECK(zero.value == 0.0);
  CHECK(zero.zero_operator);
  const auto p3 = estimate_lmax(from(fixtures::p3()), 10, 1);
  CHECK(p3.value >= 2.85);
  CHECK(p3.value <= 3.0 + 1e-12);
  CHECK_FALSE(p3.zero_operator);
}

TEST_CASE("Lanczos estimate within [0.9, 1] of the dense maximum") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.name);
    const auto l = from(f.graph);
    const double exact = oracle::lmax(l);
    const double est = estimate_lmax(l, 10, 7).value;
    CHECK(est >= 0.9 * exact);
    CHECK(est <= exact * (1.0 + 1e-12));
    const Vector dinv = [&] {
      Vector d(static_cast<std::size_t>(l.nrows()));
      for (index_t i = 0; i < l.nrows(); ++i) d[static_cast<std::size_t>(i)] = 1.0 / l.at(i, i);
      return d;
    }();
    const double exact_j = oracle::lmax_jacobi(l);
    const double est_j = estimate_lmax(l, 10, 7, dinv).value;
    CHECK(est_j >= 0.9 * exact_j);
    CHECK(est_j <= exact_j * (1.0 + 1e-12));
  }
}

TEST_CASE("degree-1 Chebyshev is a Richardson step") {
  SplitMix64 rng(4);
  for (const auto& g : fixtures::random_corpus(10, 8)) {
    const auto l = from(g);
    const auto n = static_cast<std::size_t>(g.n);
    Vector b(n);
    Vector x(n);
    for (auto& v : b) v = rng.normal();
    for (auto& v : x) v = rng.normal();
    const double lo = 0.4;
    const double hi = 5.0;
    Vector expect = x;
    Vector r(n);
    residual(l, b, x, r);
    for (std::size_t i = 0; i < n; ++i) expect[i] += 2.0 / (lo + hi) * r[i];
    chebyshev_smooth(l, b, x, 1, lo, hi);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - expect[i]) <= 1e-14 * (1.0 + std::abs(expect[i])));
  }
}

TEST_CASE("Chebyshev keeps an exact solution and reduces energy error") {
  const auto l = from(fixtures::p3());
  Vector x{0.3, -0.1, 0.7};
  const Vector b = multiply(l, x);
  Vector y = x;
  chebyshev_smooth(l, b, y, 2, 0.9, 3.3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-15));

  const std::vector<double> rhs{1.0, 0.0, -1.0};
  const Vector exact = oracle::min_norm_solve(l, rhs);
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Vector z{rng.normal(), rng.normal(), rng.normal()};
    Vector e0(3);
    for (std::size_t i = 0; i < 3; ++i) e0[i] = z[i] - exact[i];
    chebyshev_smooth(l, rhs, z, 2, 0.9, 3.3);
    Vector e1(3);
    for (std::size_t i = 0; i < 3; ++i) e1[i] = z[i] - exact[i];
    CHECK(energy(l, e1) < energy(l, e0));
  }
}

TEST_CASE("Chebyshev rejects an invalid interval") {
  const auto l = from(fixtures::p3());
  Vector x(3, 0.0);
  const Vector b(3, 0.0);
  CHECK_THROWS_AS(chebyshev_smooth(l, b, x, 2, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_smooth(l, b, x, 2, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_smooth(l, b, x, 0, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("smoother work is degree times nnz") {
  const auto l = from(grid2d_graph(5, 5));
  SmootherOptions o;
  o.degree = 3;
  const auto s = make_smoother(l, o);
  CHECK(s.lo == doctest::Approx(0.3 * s.lmax));
  CHECK(s.hi == doctest::Approx(1.1 * s.lmax));
  WorkCounter w(l.nnz());
  Vector x(25, 0.0);
  const Vector b = random_rhs(25, 1);
  s.apply(l, b, x, 0, &w);
  CHECK(w.at(0, WorkKind::smoother) == doctest::Approx(3.0));
  CHECK_THROWS_AS(make_smoother(Matrix(2, 2), {}), std::domain_error);
}

TEST_CASE("parameters") {
  CHECK(parse_cycle("V") == CycleKind::v);
  CHECK(parse_cycle("k") == CycleKind::k);
  CHECK(to_string(CycleKind::k) == "k");
  CHECK_THROWS_AS(parse_cycle("w"), std::invalid_argument);
  SolverParams p;
  CHECK_NOTHROW(p.validate());
  p.tol = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.cheby_lo = 1.2;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.max_levels = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_THROWS_AS(setup_hierarchy(from(fixtures::p3()), p), std::invalid_argument);
}

TEST_CASE("setup examples") {
  const auto star = setup_hierarchy(from(fixtures::star6()), small_coarse());
  REQUIRE(star.levels.size() == 1);
  const auto& e = std::get<EliminationLevel>(star.levels[0]);
  CHECK(e.f_vertices.size() == 5);
  CHECK(star.coarsest_op().nrows() == 1);
  CHECK(star.coarsest.is_dense());

  const auto p3 = setup_hierarchy(from(fixtures::p3()), small_coarse());
  CHECK(p3.levels.size() <= 2);
  CHECK(p3.coarsest_op().nrows() <= 2);

  const auto flat = setup_hierarchy(from(grid2d_graph(10, 10)));
  CHECK(flat.levels.empty());
  CHECK(flat.num_operators() == 1);
  CHECK(flat.operator_complexity() == 1.0);
  CHECK(flat.table() == std::vector<LevelInfo>{{"fine", 100, flat.fine.nnz()}});
}

TEST_CASE("setup rejects bad input") {
  const auto two = from(Graph{4, {{0, 1, 1.0}, {2, 3, 1.0}}});
  CHECK_THROWS_WITH_AS(setup_hierarchy(two), "graph is disconnected", GraphError);
  CHECK_THROWS_AS(setup_hierarchy(Matrix(0, 0)), GraphError);
  CHECK_THROWS_AS(setup_hierarchy(Matrix::identity(3)), GraphError);
}

TEST_CASE("stalled coarsening degrades to the coarsest solver") {
  SolverParams p = small_coarse();
  p.elim_rounds = 0;
  p.vote_threshold = 1000000;
  const auto l = from(grid2d_graph(12, 12));
  const auto h = setup_hierarchy(l, p);
  CHECK(h.stalled);
  CHECK(h.levels.empty());
  CHECK_FALSE(h.warnings.empty());
  const auto res = solve(h, random_rhs(144, 3));
  CHECK(res.report.converged);
  CHECK(res.report.iterations <= 2);

  p.dense_limit = 10;
  const auto hs = setup_hierarchy(l, p);
  CHECK_FALSE(hs.coarsest.is_dense());
  const auto rs = solve(hs, random_rhs(144, 3));
  CHECK(rs.report.converged);
}

TEST_CASE("every operator keeps the constant nullspace") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.name);
    const auto h = setup_hierarchy(from(f.graph), small_coarse());
    for (index_t k = 0; k < h.num_operators(); ++k) {
      const auto& a = h.op(k);
      CHECK(validate_laplacian(a).empty());
      const Vector ones(static_cast<std::size_t>(a.nrows()), 1.0);
      const Vector r = multiply(a, ones);
      for (const double v : r) CHECK(std::abs(v) <= 1e-10 * std::max(1.0, max_abs(a)));
    }
    for (const auto& lev : h.levels) {
      const Matrix& p = std::holds_alternative<EliminationLevel>(lev)
                            ? std::get<EliminationLevel>(lev).prolongation
                            : std::get<AggregationLevel>(lev).prolongation;
      const Vector p1 = multiply(p, Vector(static_cast<std::size_t>(p.ncols()), 1.0));
      for (const double v : p1) CHECK(std::abs(v - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("coarsest level is solved directly") {
  const auto l = from(fixtures::p3());
  const auto h = setup_hierarchy(l);
  const std::vector<double> b{1.0, 0.0, -1.0};
  Vector x(3, 0.0);
  mgcycle(h, 0, x, b, 1);
  CHECK(oracle::max_abs_diff(oracle::to_eigen(x), oracle::to_eigen(oracle::min_norm_solve(l, b))) <= 1e-12);
}

TEST_CASE("elimination-only hierarchy solves in one cycle") {
  for (const auto& g : {fixtures::star6(), star_graph(40), path_graph(3)}) {
    const auto l = from(g);
    auto p = small_coarse();
    const auto h = setup_hierarchy(l, p);
    REQUIRE(h.aggregation_levels() == 0);
    const Vector b = random_rhs(g.n, 5);
    Vector x(b.size(), 0.0);
    mgcycle(h, 0, x, b, 1);
    Vector r(b.size());
    residual(l, b, x, r);
    CHECK(norm2(r) <= 1e-10 * norm2(b));
  }
}

TEST_CASE("cycle index multiplies coarsest visits") {
  const auto l = from(grid2d_graph(16, 16));
  auto p = small_coarse();
  p.coarse_nnz = 40;
  const auto h = setup_hierarchy(l, p);
  const index_t k = h.aggregation_levels();
  REQUIRE(k >= 2);
  const Vector b = random_rhs(256, 2);
  for (int gamma : {1, 2, 3}) {
    WorkCounter w(l.nnz());
    Vector x(b.size(), 0.0);
    mgcycle(h, 0, x, b, gamma, &w);
    CHECK(w.coarse_visits() == static_cast<index_t>(std::llround(std::pow(gamma, k))));
  }
}

TEST_CASE("the V-cycle preconditioner is symmetric") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.name);
    const auto h = setup_hierarchy(from(f.graph), small_coarse());
    for (int pair = 0; pair < 20; ++pair) {
      const Vector u = random_rhs(f.graph.n, 1000 + static_cast<std::uint64_t>(pair));
      const Vector v = random_rhs(f.graph.n, 2000 + static_cast<std::uint64_t>(pair));
      const double muv = dot(vcycle(h, u), v);
      const double umv = dot(u, vcycle(h, v));
      CHECK(std::abs(muv - umv) <= 1e-10 * norm2(u) * norm2(v));
    }
  }
}

TEST_CASE("a cycle never increases the error energy") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.name);
    const auto l = from(f.graph);
    const auto h = setup_hierarchy(l, small_coarse());
    const Vector b = random_rhs(f.graph.n, 17);
    const Vector exact = oracle::min_norm_solve(l, b);
    SplitMix64 rng(23);
    for (int trial = 0; trial < 3; ++trial) {
      Vector x(b.size());
      for (auto& v : x) v = rng.normal();
      auto err = [&] {
        Vector e(b.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = x[i] - exact[i];
        return energy(l, e);
      };
      const double before = err();
      mgcycle(h, 0, x, b, 1);
      CHECK(err() <= before * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("pcg examples") {
  const auto h3 = setup_hierarchy(from(fixtures::p3()));
  const auto zero = pcg_solve(h3, std::vector<double>{0.0, 0.0, 0.0});
  CHECK(zero.report.iterations == 0);
  CHECK(zero.report.converged);
  CHECK(zero.x == Vector{0.0, 0.0, 0.0});

  const std::vector<double> b{1.0, 0.0, -1.0};
  const auto r3 = pcg_solve(h3, b);
  CHECK(r3.report.converged);
  CHECK(r3.report.relative_residual() <= 1e-8);
  CHECK(oracle::shifted_distance(r3.x, oracle::min_norm_solve(h3.fine, b)) <= 1e-8);

  const auto l = from(grid2d_graph(32, 32));
  const auto h = setup_hierarchy(l);
  const auto r = pcg_solve(h, random_rhs(1024, 8));
  CHECK(r.report.converged);
  CHECK(r.report.iterations <= 60);
  CHECK(r.report.true_relative_residual <= 1e-8 * 1.01);
  CHECK(r.report.residuals.size() == static_cast<std::size_t>(r.report.iterations) + 1);
  CHECK(std::abs(mean(r.x)) <= 1e-12);
}

TEST_CASE("iteration cap reports non-convergence") {
  auto p = SolverParams{};
  p.max_iterations = 2;
  const auto h = setup_hierarchy(from(path_graph(3000)), p);
  const auto r = pcg_solve(h, random_rhs(3000, 1));
  CHECK_FALSE(r.report.converged);
  CHECK(r.report.iterations == 2);
}

TEST_CASE("K-cycle on a single level matches PCG") {
  const auto l = from(grid2d_graph(8, 8));
  const auto h = setup_hierarchy(l);
  REQUIRE(h.levels.empty());
  const Vector b = random_rhs(64, 4);
  const auto v = pcg_solve(h, b);
  const auto k = kcycle_solve(h, b);
  CHECK(v.report.iterations == k.report.iterations);
  CHECK(oracle::max_abs_diff(oracle::to_eigen(v.x), oracle::to_eigen(k.x)) <= 1e-12);
}

TEST_CASE("K-cycle needs no more iterations than the V-cycle on a long path") {
  const auto l = from(path_graph(1000));
  SolverParams pv;
  SolverParams pk;
  pk.cycle = CycleKind::k;
  const Vector b = random_rhs(1000, 6);
  const auto v = solve(setup_hierarchy(l, pv), b);
  const auto k = solve(setup_hierarchy(l, pk), b);
  CHECK(v.report.converged);
  CHECK(k.report.converged);
  CHECK(k.report.iterations <= v.report.iterations);
}

TEST_CASE("K-cycle costs more per iteration on a deep hierarchy") {
  const auto l = from(grid2d_graph(48, 48));
  SolverParams p;
  p.coarse_nnz = 20;
  const auto h = setup_hierarchy(l, p);
  REQUIRE(h.aggregation_levels() >= 4);
  const Vector b = random_rhs(l.nrows(), 9);
  WorkCounter wv(l.nnz());
  WorkCounter wk(l.nnz());
  (void)vcycle(h, b, &wv);
  (void)kcycle(h, 0, b, &wk);
  CHECK(wk.total() > wv.total());
  CHECK(wk.coarse_visits() > wv.coarse_visits());
}

TEST_CASE("solves are deterministic and layout independent") {
  const auto l = from(fixtures::distribution_fixtures()[10].graph);
  const Vector b = random_rhs(l.nrows(), 3);
  const auto ref = solve(setup_hierarchy(l), b);
  const auto again = solve(setup_hierarchy(l), b);
  CHECK(again.x == ref.x);
  CHECK(again.report.work_units == ref.report.work_units);
  for (const GridShape grid : {GridShape{1, 4}, GridShape{2, 2}, GridShape{3, 2}}) {
    SolverParams p;
    p.grid = grid;
    const auto h = setup_hierarchy(l, p);
    CHECK(h.table() == setup_hierarchy(l).table());
  }
}

#include "glap/hierarchy.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <chrono>
#include <stdexcept>

#include "glap/laplacian.hpp"
#include "glap/rng.hpp"
#include "glap/strength.hpp"
#include "glap/vector_ops.hpp"

namespace glap {

std::string to_string(CycleKind c) { return c == CycleKind::v ? "v" : "k"; }

CycleKind parse_cycle(std::string_view text) {
  if (text == "v" || text == "V") return CycleKind::v;
  if (text == "k" || text == "K") return CycleKind::k;
  throw std::invalid_argument("unknown cycle '" + std::string(text) + "' (expected v or k)");
}

void SolverParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("SolverParams: ") + what);
  };
  require(tol > 0.0 && tol < 1.0, "tol must lie in (0, 1)");
  require(cheby_degree >= 1, "cheby_degree must be positive");
  require(pre_sweeps >= 0 && post_sweeps >= 0, "sweep counts must be nonnegative");
  require(elim_gate > 0.0 && elim_gate < 1.0, "elim_gate must lie in (0, 1)");
  require(elim_max_degree >= 1, "elim_max_degree must be positive");
  require(elim_rounds >= 0, "elim_rounds must be nonnegative");
  require(vote_threshold >= 1, "vote_threshold must be positive");
  require(voting_rounds >= 1, "voting_rounds must be positive");
  require(max_levels >= 1, "max_levels must be positive");
  require(coarse_nnz >= 1, "coarse_nnz must be positive");
  require(test_vectors >= 1, "test_vectors must be positive");
  require(test_sweeps >= 0, "test_sweeps must be nonnegative");
  require(test_omega > 0.0, "test_omega must be positive");
  require(lanczos_iters >= 1, "lanczos_iters must be positive");
  require(cheby_lo > 0.0 && cheby_hi > cheby_lo, "need 0 < cheby_lo < cheby_hi");
  require(kcycle_inner >= 1, "kcycle_inner must be positive");
  require(max_iterations >= 1, "max_iterations must be positive");
  require(dense_limit >= 1, "dense_limit must be positive");
  require(coarse_sweeps >= 1, "coarse_sweeps must be positive");
  require(grid.rows >= 1 && grid.cols >= 1, "grid dimensions must be positive");
}

struct CoarseSolver::Dense {
  Eigen::LLT<Eigen::MatrixXd> llt;
  index_t n = 0;
};

CoarseSolver CoarseSolver::dense(const Matrix& l) {
  const index_t n = l.nrows();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (index_t i = 0; i < n; ++i) {
    const auto cols = l.row_cols(i);
    const auto vals = l.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) a(i, cols[k]) = vals[k];
  }
  if (n > 0) {
    a.row(n - 1).setZero();
    a.col(n - 1).setZero();
    a(n - 1, n - 1) = 1.0;
  }
  auto d = std::make_shared<Dense>();
  d->n = n;
  d->llt.compute(a);
  if (d->llt.info() != Eigen::Success) {
    throw std::domain_error("coarse solve: grounded operator is not positive definite");
  }
  CoarseSolver s;
  s.dense_ = std::move(d);
  return s;
}

CoarseSolver CoarseSolver::sweeps(SmootherData smoother, int count) {
  CoarseSolver s;
  s.smoother_ = std::move(smoother);
  s.sweeps_ = count;
  return s;
}

void CoarseSolver::solve(const Matrix& l, std::span<const double> b, std::span<double> x) const {
  const auto n = x.size();
  if (dense_) {
    if (static_cast<index_t>(n) != dense_->n || b.size() != n) {
      throw std::invalid_argument("coarse solve: size mismatch");
    }
    if (n == 0) return;
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(n));
    rhs[static_cast<Eigen::Index>(n) - 1] = 0.0;
    const Eigen::VectorXd y = dense_->llt.solve(rhs);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[static_cast<Eigen::Index>(i)];
    remove_mean(x);
    return;
  }
  std::fill(x.begin(), x.end(), 0.0);
  for (int s = 0; s < sweeps_; ++s) smoother_.apply(l, b, x, 0, nullptr);
  remove_mean(x);
}

double CoarseSolver::work_nnz(const Matrix& l) const {
  if (dense_) return static_cast<double>(dense_->n) * static_cast<double>(dense_->n);
  return static_cast<double>(sweeps_) * static_cast<double>(smoother_.degree) *
         static_cast<double>(l.nnz());
}

const Matrix& Hierarchy::op(index_t l) const {
  if (l < 0 || l > static_cast<index_t>(levels.size())) {
    throw std::out_of_range("Hierarchy::op: level " + std::to_string(l));
  }
  if (l == 0) return fine;
  return std::visit([](const auto& lev) -> const Matrix& { return lev.coarse; },
                    levels[static_cast<std::size_t>(l) - 1]);
}

index_t Hierarchy::aggregation_levels() const {
  index_t k = 0;
  for (const auto& lev : levels) k += std::holds_alternative<AggregationLevel>(lev) ? 1 : 0;
  return k;
}

std::vector<LevelInfo> Hierarchy::table() const {
  std::vector<LevelInfo> out;
  out.push_back({"fine", fine.nrows(), fine.nnz()});
  for (const auto& lev : levels) {
    const bool elim = std::holds_alternative<EliminationLevel>(lev);
    const Matrix& c = std::visit([](const auto& x) -> const Matrix& { return x.coarse; }, lev);
    out.push_back({elim ? "elimination" : "aggregation", c.nrows(), c.nnz()});
  }
  return out;
}

double Hierarchy::operator_complexity() const {
  double total = 0.0;
  for (index_t l = 0; l < num_operators(); ++l) total += static_cast<double>(op(l).nnz());
  return fine.nnz() == 0 ? 1.0 : total / static_cast<double>(fine.nnz());
}

namespace {

SmootherOptions smoother_options(const SolverParams& p, std::uint64_t seed) {
  SmootherOptions o;
  o.degree = p.cheby_degree;
  o.lanczos_iters = p.lanczos_iters;
  o.lo_factor = p.cheby_lo;
  o.hi_factor = p.cheby_hi;
  o.jacobi = p.jacobi;
  o.seed = seed;
  return o;
}

}  // namespace

Hierarchy setup_hierarchy(const Matrix& l, const SolverParams& params) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  if (l.nrows() == 0) throw GraphError("graph has no vertices");
  if (const auto v = validate_laplacian(l); !v.empty()) {
    throw GraphError("not a graph Laplacian: " + describe(v.front()));
  }
  if (!is_connected(l)) throw GraphError("graph is disconnected");

  Hierarchy h;
  h.params = params;
  h.fine = l;

  const Distribution fine_dist{
      params.grid,
      params.randomize ? random_permutation(l.nrows(), derive_seed(params.seed, 0x5eed))
                       : Permutation{}};
  const Distribution coarse_dist{params.grid, Permutation{}};

  EliminationOptions elim_opts;
  elim_opts.max_degree = params.elim_max_degree;
  AggregationOptions agg_opts;
  agg_opts.rounds = params.voting_rounds;
  agg_opts.vote_threshold = params.vote_threshold;

  auto current = [&]() -> const Matrix& { return h.levels.empty() ? h.fine : h.coarsest_op(); };
  auto done = [&] {
    return current().nnz() <= params.coarse_nnz || h.num_operators() >= params.max_levels;
  };
  auto dist = [&]() -> const Distribution& { return h.levels.empty() ? fine_dist : coarse_dist; };

  int stalls = 0;
  std::uint64_t attempt = 0;
  while (!done()) {
    for (int round = 0; round < params.elim_rounds && !done(); ++round) {
      const Matrix& a = current();
      const auto f = select_elimination(a, elim_opts, dist());
      if (static_cast<double>(f.size()) <= params.elim_gate * static_cast<double>(a.nrows())) break;
      h.levels.emplace_back(build_elimination_level(a, f));
    }
    if (done()) break;

    const Matrix& a = current();
    const auto level_id = static_cast<std::uint64_t>(h.levels.size());
    TestVectorOptions tv;
    tv.count = params.test_vectors;
    tv.sweeps = params.test_sweeps;
    tv.omega = params.test_omega;
    tv.seed = derive_seed(params.seed, 0x100000 + level_id * 0x100 + attempt);
    const Matrix s = strength_matrix(a, tv, dist());
    Assignment assign = aggregate(s, agg_opts, dist());
    if (assign.count() == a.nrows()) {
      ++attempt;
      if (++stalls >= 2) {
        h.stalled = true;
        h.warnings.push_back("coarsening stalled at n=" + std::to_string(a.nrows()) + ", nnz=" +
                             std::to_string(a.nnz()));
        break;
      }
      continue;
    }
    stalls = 0;
    attempt = 0;
    AggregationLevel lev;
    lev.smoother = make_smoother(a, smoother_options(params, derive_seed(params.seed, 0x200000 + level_id)));
    lev.restriction = build_restriction(assign);
    lev.prolongation = transpose(lev.restriction);
    lev.coarse = galerkin_coarse(lev.restriction, a, lev.prolongation);
    lev.assignment = std::move(assign);
    h.levels.emplace_back(std::move(lev));
  }

  const Matrix& c = current();
  if (c.nrows() <= params.dense_limit) {
    h.coarsest = CoarseSolver::dense(c);
  } else {
    h.warnings.push_back("coarsest operator too large for a dense factorization; using " +
                         std::to_string(params.coarse_sweeps) + " smoothing sweeps");
    h.coarsest = CoarseSolver::sweeps(
        make_smoother(c, smoother_options(params, derive_seed(params.seed, 0x300000))),
        params.coarse_sweeps);
  }
  h.setup_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return h;
}

}  // namespace glap

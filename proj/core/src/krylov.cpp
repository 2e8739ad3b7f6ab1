#include "glap/krylov.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "glap/cycle.hpp"
#include "glap/metrics.hpp"
#include "glap/rng.hpp"
#include "glap/work.hpp"

namespace glap {

namespace {

using Clock = std::chrono::steady_clock;

SolveReport base_report(const Hierarchy& h) {
  SolveReport rep;
  rep.n = h.fine.nrows();
  rep.nnz = h.fine.nnz();
  rep.params = h.params;
  rep.levels = h.table();
  rep.setup_seconds = h.setup_seconds;
  rep.operator_complexity = h.operator_complexity();
  return rep;
}

void finish(const Hierarchy& h, std::span<const double> b, SolveResult& res,
            const WorkCounter& work, Clock::time_point t0) {
  auto& rep = res.report;
  rep.solve_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  rep.work_units = work.total();
  rep.coarse_visits = work.coarse_visits();
  const double r0 = rep.residuals.front();
  const double rk = rep.residuals.back();
  rep.wda = wda(r0, rk, rep.work_units);
  rep.tda = tda(r0, rk, rep.solve_seconds);
  Vector r(b.size());
  residual(h.fine, b, res.x, r);
  const double bn = norm2(b);
  rep.true_relative_residual = bn == 0.0 ? 0.0 : norm2(r) / bn;
}

using Preconditioner = std::function<Vector(std::span<const double>, WorkCounter*)>;

// Flexible CG with one stored direction. With a fixed symmetric
// preconditioner this is the same iteration as preconditioned CG.
SolveResult outer_krylov(const Hierarchy& h, std::span<const double> b_in, const Preconditioner& m,
                         bool flexible) {
  const Matrix& a = h.fine;
  if (static_cast<index_t>(b_in.size()) != a.nrows()) throw std::invalid_argument("solve: rhs size");
  const auto t0 = Clock::now();
  const auto n = b_in.size();
  const auto ni = static_cast<index_t>(n);
  WorkCounter work(std::max<index_t>(a.nnz(), 1));

  SolveResult res;
  res.report = base_report(h);
  res.x.assign(n, 0.0);
  Vector r(b_in.begin(), b_in.end());
  remove_mean(r);
  const double r0 = norm2(r);
  res.report.residuals.push_back(r0);
  if (r0 == 0.0) {
    res.report.converged = true;
    finish(h, b_in, res, work, t0);
    return res;
  }
  const double target = h.params.tol * r0;

  Vector z = m(r, &work);
  remove_mean(z);
  Vector p = z;
  Vector q(n);
  double rz = dot(r, z);
  work.add_vector_ops(0, 3, ni);
  for (int it = 1; it <= h.params.max_iterations; ++it) {
    multiply(a, p, q);
    work.add(0, WorkKind::matvec, static_cast<double>(a.nnz()));
    const double pq = dot(p, q);
    if (!(pq > 0.0) || !std::isfinite(pq)) break;
    const double alpha = (flexible ? dot(p, r) : rz) / pq;
    axpy(alpha, p, res.x);
    axpy(-alpha, q, r);
    remove_mean(res.x);
    remove_mean(r);
    const double rn = norm2(r);
    work.add_vector_ops(0, flexible ? 8 : 7, ni);
    res.report.iterations = it;
    res.report.residuals.push_back(rn);
    if (rn <= target) {
      res.report.converged = true;
      break;
    }
    z = m(r, &work);
    remove_mean(z);
    double beta = 0.0;
    if (flexible) {
      beta = -dot(z, q) / pq;
    } else {
      const double rz_next = dot(r, z);
      beta = rz_next / rz;
      rz = rz_next;
    }
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    work.add_vector_ops(0, 4, ni);
  }
  finish(h, b_in, res, work, t0);
  return res;
}

}  // namespace

SolveResult pcg_solve(const Hierarchy& h, std::span<const double> b) {
  return outer_krylov(
      h, b, [&h](std::span<const double> r, WorkCounter* w) { return vcycle(h, r, w); }, false);
}

SolveResult kcycle_solve(const Hierarchy& h, std::span<const double> b) {
  return outer_krylov(
      h, b, [&h](std::span<const double> r, WorkCounter* w) { return kcycle(h, 0, r, w); }, true);
}

SolveResult solve(const Hierarchy& h, std::span<const double> b) {
  return h.params.cycle == CycleKind::k ? kcycle_solve(h, b) : pcg_solve(h, b);
}

Vector random_rhs(index_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector b(static_cast<std::size_t>(n));
  for (auto& v : b) v = rng.normal();
  remove_mean(b);
  return b;
}

}  // namespace glap

#include "glap/cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace glap {

namespace {

bool is_coarsest(const Hierarchy& h, index_t l) {
  return l == static_cast<index_t>(h.levels.size());
}

void direct(const Hierarchy& h, index_t l, std::span<double> x, std::span<const double> b,
            WorkCounter* work) {
  const Matrix& a = h.op(l);
  h.coarsest.solve(a, b, x);
  if (work != nullptr) {
    work->add(l, WorkKind::coarse_solve, h.coarsest.work_nnz(a));
    work->count_coarse_visit();
  }
}

Vector restrict_elim(const EliminationLevel& lev, index_t l, std::span<const double> b,
                     WorkCounter* work) {
  if (work != nullptr) {
    work->add(l, WorkKind::restriction, static_cast<double>(lev.prolongation.nnz()));
  }
  return elim_restrict(lev, b);
}

Vector prolong_elim(const EliminationLevel& lev, index_t l, std::span<const double> xc,
                    std::span<const double> b, WorkCounter* work) {
  if (work != nullptr) {
    work->add(l, WorkKind::prolongation,
              static_cast<double>(lev.prolongation.nnz() + static_cast<index_t>(lev.f_vertices.size())));
  }
  return elim_prolong(lev, xc, b);
}

void residual_on(const Matrix& a, index_t l, std::span<const double> b, std::span<const double> x,
                 std::span<double> r, WorkCounter* work) {
  residual(a, b, x, r);
  if (work != nullptr) work->add(l, WorkKind::residual, static_cast<double>(a.nnz()));
}

void apply_transfer(const Matrix& t, index_t l, WorkKind kind, std::span<const double> in,
                    std::span<double> out, WorkCounter* work) {
  multiply(t, in, out);
  if (work != nullptr) work->add(l, kind, static_cast<double>(t.nnz()));
}

void smooth(const Hierarchy& h, const AggregationLevel& lev, index_t l, std::span<const double> b,
            std::span<double> x, int sweeps, WorkCounter* work) {
  for (int s = 0; s < sweeps; ++s) lev.smoother.apply(h.op(l), b, x, l, work);
}

}  // namespace

void mgcycle(const Hierarchy& h, index_t l, std::span<double> x, std::span<const double> b,
             int gamma, WorkCounter* work) {
  if (gamma < 1) throw std::invalid_argument("mgcycle: gamma must be at least 1");
  if (l < 0 || l > static_cast<index_t>(h.levels.size())) {
    throw std::out_of_range("mgcycle: level " + std::to_string(l));
  }
  const Matrix& a = h.op(l);
  if (static_cast<index_t>(x.size()) != a.nrows() || b.size() != x.size()) {
    throw std::invalid_argument("mgcycle: size mismatch");
  }
  if (is_coarsest(h, l)) {
    direct(h, l, x, b, work);
    return;
  }
  const Level& level = h.levels[static_cast<std::size_t>(l)];

  if (const auto* elim = std::get_if<EliminationLevel>(&level)) {
    const bool zero_guess = std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
    if (zero_guess) {
      const Vector bc = restrict_elim(*elim, l, b, work);
      Vector xc(bc.size(), 0.0);
      mgcycle(h, l + 1, xc, bc, gamma, work);
      const Vector xn = prolong_elim(*elim, l, xc, b, work);
      std::copy(xn.begin(), xn.end(), x.begin());
      return;
    }
    // Correction form: solve for the error against the current residual.
    Vector r(x.size());
    residual_on(a, l, b, x, r, work);
    const Vector rc = restrict_elim(*elim, l, r, work);
    Vector ec(rc.size(), 0.0);
    mgcycle(h, l + 1, ec, rc, gamma, work);
    const Vector e = prolong_elim(*elim, l, ec, r, work);
    axpy(1.0, e, x);
    return;
  }

  const auto& agg = std::get<AggregationLevel>(level);
  smooth(h, agg, l, b, x, h.params.pre_sweeps, work);
  Vector r(x.size());
  residual_on(a, l, b, x, r, work);
  Vector rc(static_cast<std::size_t>(agg.restriction.nrows()));
  apply_transfer(agg.restriction, l, WorkKind::restriction, r, rc, work);
  Vector xc(rc.size(), 0.0);
  for (int i = 0; i < gamma; ++i) mgcycle(h, l + 1, xc, rc, gamma, work);
  Vector corr(x.size());
  apply_transfer(agg.prolongation, l, WorkKind::prolongation, xc, corr, work);
  axpy(1.0, corr, x);
  smooth(h, agg, l, b, x, h.params.post_sweeps, work);
}

Vector vcycle(const Hierarchy& h, std::span<const double> b, WorkCounter* work) {
  Vector x(b.size(), 0.0);
  mgcycle(h, 0, x, b, 1, work);
  return x;
}

namespace {

Vector coarse_krylov(const Hierarchy& h, index_t l, std::span<const double> b, WorkCounter* work);

}  // namespace

Vector kcycle(const Hierarchy& h, index_t l, std::span<const double> b, WorkCounter* work) {
  if (l < 0 || l > static_cast<index_t>(h.levels.size())) {
    throw std::out_of_range("kcycle: level " + std::to_string(l));
  }
  const Matrix& a = h.op(l);
  if (static_cast<index_t>(b.size()) != a.nrows()) throw std::invalid_argument("kcycle: size mismatch");
  Vector x(b.size(), 0.0);
  if (is_coarsest(h, l)) {
    direct(h, l, x, b, work);
    return x;
  }
  const Level& level = h.levels[static_cast<std::size_t>(l)];
  if (const auto* elim = std::get_if<EliminationLevel>(&level)) {
    const Vector bc = restrict_elim(*elim, l, b, work);
    const Vector xc = kcycle(h, l + 1, bc, work);
    return prolong_elim(*elim, l, xc, b, work);
  }
  const auto& agg = std::get<AggregationLevel>(level);
  smooth(h, agg, l, b, x, h.params.pre_sweeps, work);
  Vector r(x.size());
  residual_on(a, l, b, x, r, work);
  Vector rc(static_cast<std::size_t>(agg.restriction.nrows()));
  apply_transfer(agg.restriction, l, WorkKind::restriction, r, rc, work);
  const Vector xc = coarse_krylov(h, l + 1, rc, work);
  Vector corr(x.size());
  apply_transfer(agg.prolongation, l, WorkKind::prolongation, xc, corr, work);
  axpy(1.0, corr, x);
  smooth(h, agg, l, b, x, h.params.post_sweeps, work);
  return x;
}

namespace {

// Approximate solve of L_l x = b for the K-cycle coarse correction.
Vector coarse_krylov(const Hierarchy& h, index_t l, std::span<const double> b, WorkCounter* work) {
  if (is_coarsest(h, l)) {
    Vector x(b.size(), 0.0);
    direct(h, l, x, b, work);
    return x;
  }
  const Level& level = h.levels[static_cast<std::size_t>(l)];
  if (const auto* elim = std::get_if<EliminationLevel>(&level)) {
    const Vector bc = restrict_elim(*elim, l, b, work);
    const Vector xc = coarse_krylov(h, l + 1, bc, work);
    return prolong_elim(*elim, l, xc, b, work);
  }

  // Flexible CG with one stored direction.
  const Matrix& a = h.op(l);
  const auto n = b.size();
  const auto ni = static_cast<index_t>(n);
  Vector x(n, 0.0);
  Vector r(b.begin(), b.end());
  Vector p;
  Vector q(n);
  Vector q_prev;
  double pq_prev = 0.0;
  for (int it = 0; it < h.params.kcycle_inner; ++it) {
    Vector z = kcycle(h, l, r, work);
    if (it == 0) {
      p = std::move(z);
    } else {
      const double beta = dot(z, q_prev) / pq_prev;
      for (std::size_t i = 0; i < n; ++i) p[i] = z[i] - beta * p[i];
      if (work != nullptr) work->add_vector_ops(l, 2, ni);
    }
    multiply(a, p, q);
    const double pq = dot(p, q);
    if (work != nullptr) {
      work->add(l, WorkKind::matvec, static_cast<double>(a.nnz()));
      work->add_vector_ops(l, 2, ni);
    }
    if (!(pq > 0.0)) break;
    const double alpha = dot(p, r) / pq;
    axpy(alpha, p, x);
    axpy(-alpha, q, r);
    if (work != nullptr) work->add_vector_ops(l, 2, ni);
    q_prev = q;
    pq_prev = pq;
  }
  return x;
}

}  // namespace

}  // namespace glap

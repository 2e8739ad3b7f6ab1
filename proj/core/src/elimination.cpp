#include "glap/elimination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "glap/laplacian.hpp"
#include "glap/rng.hpp"

namespace glap {

std::uint64_t hash64(index_t i) noexcept { return mix64(static_cast<std::uint64_t>(i) + kGoldenGamma); }

std::vector<ElimCandidate> elimination_candidates(const Matrix& l, const EliminationOptions& opts) {
  const auto deg = offdiag_degrees(l);
  std::vector<ElimCandidate> c(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] <= opts.max_degree) {
      const auto id = static_cast<index_t>(i);
      c[i] = {id, opts.hash(id)};
    }
  }
  return c;
}

std::vector<ElimCandidate> elimination_choice(const DistMatrix<double>& l,
                                              std::span<const ElimCandidate> candidates) {
  return spmv_semiring(l, candidates, MinHashSemiring{});
}

std::vector<index_t> select_elimination(const Matrix& l, const EliminationOptions& opts,
                                        const Distribution& dist) {
  const auto cand = elimination_candidates(l, opts);
  const auto z = elimination_choice(dist.apply(l), cand);
  std::vector<index_t> f;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].index == static_cast<index_t>(i)) f.push_back(static_cast<index_t>(i));
  }
  return f;
}

EliminationLevel build_elimination_level(const Matrix& l, std::span<const index_t> f) {
  const index_t n = l.nrows();
  if (l.ncols() != n) throw std::invalid_argument("build_elimination_level: matrix not square");
  EliminationLevel lev;
  lev.n = n;
  std::vector<index_t> coarse_id(static_cast<std::size_t>(n), 0);
  for (const index_t v : f) {
    if (v < 0 || v >= n) throw std::invalid_argument("build_elimination_level: vertex out of range");
    if (coarse_id[static_cast<std::size_t>(v)] == -1) {
      throw std::invalid_argument("build_elimination_level: duplicate vertex " + std::to_string(v));
    }
    coarse_id[static_cast<std::size_t>(v)] = -1;
  }
  for (index_t i = 0; i < n; ++i) {
    if (coarse_id[static_cast<std::size_t>(i)] == -1) {
      lev.f_vertices.push_back(i);
    } else {
      coarse_id[static_cast<std::size_t>(i)] = static_cast<index_t>(lev.c_vertices.size());
      lev.c_vertices.push_back(i);
    }
  }
  const auto nf = static_cast<index_t>(lev.f_vertices.size());
  const auto nc = static_cast<index_t>(lev.c_vertices.size());

  std::vector<index_t> forward(static_cast<std::size_t>(n));
  for (index_t p = 0; p < nf; ++p) forward[static_cast<std::size_t>(lev.f_vertices[static_cast<std::size_t>(p)])] = p;
  for (index_t k = 0; k < nc; ++k) forward[static_cast<std::size_t>(lev.c_vertices[static_cast<std::size_t>(k)])] = nf + k;
  lev.order = Permutation::from_forward(std::move(forward));

  std::vector<Triplet<double>> fc;
  std::vector<Triplet<double>> p;
  std::vector<Triplet<double>> coarse;
  p.reserve(static_cast<std::size_t>(nc));
  for (index_t k = 0; k < nc; ++k) p.push_back({lev.c_vertices[static_cast<std::size_t>(k)], k, 1.0});
  for (index_t k = 0; k < nc; ++k) {
    const index_t a = lev.c_vertices[static_cast<std::size_t>(k)];
    const auto cols = l.row_cols(a);
    const auto vals = l.row_values(a);
    for (std::size_t q = 0; q < cols.size(); ++q) {
      const index_t cj = coarse_id[static_cast<std::size_t>(cols[q])];
      if (cj >= 0) coarse.push_back({k, cj, vals[q]});
    }
  }

  lev.dinv_ff.resize(static_cast<std::size_t>(nf));
  std::vector<std::pair<index_t, double>> nbrs;
  for (index_t row = 0; row < nf; ++row) {
    const index_t v = lev.f_vertices[static_cast<std::size_t>(row)];
    const auto cols = l.row_cols(v);
    const auto vals = l.row_values(v);
    double diag = 0.0;
    nbrs.clear();
    for (std::size_t q = 0; q < cols.size(); ++q) {
      const index_t j = cols[q];
      if (j == v) {
        diag = vals[q];
        continue;
      }
      const index_t cj = coarse_id[static_cast<std::size_t>(j)];
      if (cj < 0) {
        throw std::invalid_argument("build_elimination_level: eliminated vertices " +
                                    std::to_string(v) + " and " + std::to_string(j) + " are adjacent");
      }
      nbrs.emplace_back(cj, vals[q]);
    }
    if (!(diag > 0.0)) {
      throw std::domain_error("build_elimination_level: nonpositive diagonal at vertex " + std::to_string(v));
    }
    const double dinv = 1.0 / diag;
    lev.dinv_ff[static_cast<std::size_t>(row)] = dinv;
    for (const auto& [cj, w] : nbrs) {
      fc.push_back({row, cj, w});
      p.push_back({v, cj, -w * dinv});
    }
    // Entry-local Schur update; (a, b) and (b, a) receive identical terms in the
    // same order, so the result is exactly symmetric. The diagonal is rebuilt
    // from the off-diagonals at the end.
    for (const auto& [ca, wa] : nbrs) {
      for (const auto& [cb, wb] : nbrs) coarse.push_back({ca, cb, -(wa * wb) * dinv});
    }
  }
  lev.l_fc = Matrix::from_triplets(nf, nc, std::move(fc));
  lev.prolongation = Matrix::from_triplets(n, nc, std::move(p));
  lev.coarse = laplacian_from_offdiagonal(nc, std::move(coarse));
  return lev;
}

Vector elim_restrict(const EliminationLevel& level, std::span<const double> b) {
  if (static_cast<index_t>(b.size()) != level.n) throw std::invalid_argument("elim_restrict: size mismatch");
  const auto& p = level.prolongation;
  Vector out(static_cast<std::size_t>(p.ncols()), 0.0);
  for (index_t i = 0; i < p.nrows(); ++i) {
    const auto cols = p.row_cols(i);
    const auto vals = p.row_values(i);
    for (std::size_t q = 0; q < cols.size(); ++q) out[static_cast<std::size_t>(cols[q])] += vals[q] * b[static_cast<std::size_t>(i)];
  }
  return out;
}

Vector elim_prolong(const EliminationLevel& level, std::span<const double> x_next,
                    std::span<const double> b) {
  if (static_cast<index_t>(b.size()) != level.n ||
      static_cast<index_t>(x_next.size()) != level.prolongation.ncols()) {
    throw std::invalid_argument("elim_prolong: size mismatch");
  }
  Vector x = multiply(level.prolongation, x_next);
  for (std::size_t row = 0; row < level.f_vertices.size(); ++row) {
    const auto v = static_cast<std::size_t>(level.f_vertices[row]);
    x[v] += level.dinv_ff[row] * b[v];
  }
  return x;
}

}  // namespace glap

#include "glap/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace glap {

void validate_graph(const Graph& g) {
  if (g.n < 0) throw GraphError("graph has negative vertex count");
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(g.n) + ")");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has nonpositive weight");
    }
  }
}

Matrix laplacian_from_graph(const Graph& g) {
  validate_graph(g);
  std::vector<Triplet<double>> t;
  t.reserve(g.edges.size() * 4);
  for (const auto& e : g.edges) {
    t.push_back({e.u, e.v, -e.w});
    t.push_back({e.v, e.u, -e.w});
    t.push_back({e.u, e.u, e.w});
    t.push_back({e.v, e.v, e.w});
  }
  return Matrix::from_triplets(g.n, g.n, std::move(t));
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case ViolationKind::not_square:
      os << "matrix is not square";
      break;
    case ViolationKind::row_sum:
      os << "row " << v.row << " sums to " << v.value;
      break;
    case ViolationKind::sign:
      os << "entry (" << v.row << ", " << v.col << ") = " << v.value << " has the wrong sign";
      break;
    case ViolationKind::symmetry:
      os << "entry (" << v.row << ", " << v.col << ") differs from its transpose by " << v.value;
      break;
  }
  return os.str();
}

std::vector<Violation> validate_laplacian(const Matrix& l, double rel_tol) {
  std::vector<Violation> out;
  if (l.nrows() != l.ncols()) {
    out.push_back({ViolationKind::not_square, l.nrows(), l.ncols(), 0.0});
    return out;
  }
  double max_diag = 0.0;
  for (index_t i = 0; i < l.nrows(); ++i) max_diag = std::max(max_diag, std::abs(l.at(i, i)));
  const double tol = rel_tol * max_diag;
  for (index_t i = 0; i < l.nrows(); ++i) {
    const auto cols = l.row_cols(i);
    const auto vals = l.row_values(i);
    double sum = 0.0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const index_t j = cols[k];
      const double v = vals[k];
      sum += v;
      if ((j == i && v < 0.0) || (j != i && v > 0.0)) out.push_back({ViolationKind::sign, i, j, v});
      const double vt = l.at(j, i);
      if (!l.contains(j, i) || std::abs(v - vt) > tol) {
        out.push_back({ViolationKind::symmetry, i, j, v - vt});
      }
    }
    if (std::abs(sum) > tol) out.push_back({ViolationKind::row_sum, i, i, sum});
  }
  return out;
}

Matrix laplacian_from_offdiagonal(index_t n, std::vector<Triplet<double>> entries) {
  std::erase_if(entries, [](const Triplet<double>& t) { return t.row == t.col; });
  auto off = Matrix::from_triplets(n, n, std::move(entries));
  auto t = off.triplets();
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  for (const auto& e : t) diag[static_cast<std::size_t>(e.row)] -= e.value;
  for (index_t i = 0; i < n; ++i) t.push_back({i, i, diag[static_cast<std::size_t>(i)]});
  return Matrix::from_triplets(n, n, std::move(t));
}

std::vector<index_t> connected_components(const Matrix& l) {
  // Frontier expansion: each sweep is the (or, and) product of the pattern
  // with the sparse frontier indicator, masked by the unvisited set.
  const index_t n = l.nrows();
  std::vector<index_t> label(static_cast<std::size_t>(n), -1);
  std::vector<index_t> frontier;
  std::vector<index_t> next;
  index_t count = 0;
  for (index_t s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = count;
    frontier.assign(1, s);
    while (!frontier.empty()) {
      next.clear();
      for (const index_t f : frontier) {
        for (const index_t j : l.row_cols(f)) {
          if (label[static_cast<std::size_t>(j)] < 0) {
            label[static_cast<std::size_t>(j)] = count;
            next.push_back(j);
          }
        }
      }
      frontier.swap(next);
    }
    ++count;
  }
  return label;
}

bool is_connected(const Matrix& l) {
  const auto label = connected_components(l);
  return std::all_of(label.begin(), label.end(), [](index_t c) { return c == 0; });
}

std::vector<index_t> offdiag_degrees(const Matrix& l) {
  std::vector<index_t> deg(static_cast<std::size_t>(l.nrows()), 0);
  for (index_t i = 0; i < l.nrows(); ++i) {
    index_t d = 0;
    for (const index_t j : l.row_cols(i)) d += (j != i) ? 1 : 0;
    deg[static_cast<std::size_t>(i)] = d;
  }
  return deg;
}

Graph largest_component(const Graph& g, std::vector<index_t>* old_ids) {
  const auto label = connected_components(laplacian_from_graph(g));
  index_t ncomp = 0;
  for (const auto c : label) ncomp = std::max(ncomp, c + 1);
  std::vector<index_t> size(static_cast<std::size_t>(ncomp), 0);
  for (const auto c : label) ++size[static_cast<std::size_t>(c)];
  const auto best = static_cast<index_t>(std::max_element(size.begin(), size.end()) - size.begin());

  std::vector<index_t> new_id(static_cast<std::size_t>(g.n), -1);
  Graph out;
  if (old_ids != nullptr) old_ids->clear();
  for (index_t v = 0; v < g.n; ++v) {
    if (label[static_cast<std::size_t>(v)] == best) {
      new_id[static_cast<std::size_t>(v)] = out.n++;
      if (old_ids != nullptr) old_ids->push_back(v);
    }
  }
  for (const auto& e : g.edges) {
    const auto a = new_id[static_cast<std::size_t>(e.u)];
    const auto b = new_id[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) out.edges.push_back({a, b, e.w});
  }
  return out;
}

}  // namespace glap

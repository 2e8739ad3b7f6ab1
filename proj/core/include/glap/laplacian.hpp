#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "glap/sparse_matrix.hpp"

namespace glap {

/// Undirected weighted edge. Stored once per undirected pair.
struct Edge {
  index_t u;
  index_t v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Graph {
  index_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws GraphError on an out-of-range endpoint, a self-loop, or a weight
/// that is not finite and strictly positive.
void validate_graph(const Graph& g);

/// L = D - A. Parallel edges are summed.
Matrix laplacian_from_graph(const Graph& g);

enum class ViolationKind { not_square, row_sum, sign, symmetry };

struct Violation {
  ViolationKind kind;
  index_t row;
  index_t col;
  double value;
};

std::string describe(const Violation& v);

/// Checks zero row sums (|sum| <= rel_tol * max diagonal), nonpositive
/// off-diagonals, nonnegative diagonal, and exact symmetry of pattern and
/// values up to rel_tol. Returns every violation found; empty means ok.
std::vector<Violation> validate_laplacian(const Matrix& l, double rel_tol = 1e-12);

/// Assembles an n x n Laplacian from entries whose off-diagonal part is
/// already correct. Diagonal entries in `entries` are ignored; each diagonal
/// is set to minus its summed off-diagonal row, so constant vectors are in the
/// null space up to one rounding per entry.
Matrix laplacian_from_offdiagonal(index_t n, std::vector<Triplet<double>> entries);

/// Component label per vertex, numbered in order of first appearance. Built by
/// frontier expansion with the (or, and) pattern product.
std::vector<index_t> connected_components(const Matrix& l);
bool is_connected(const Matrix& l);

/// Adjacency degree (stored off-diagonal entries) per row.
std::vector<index_t> offdiag_degrees(const Matrix& l);

/// Subgraph induced by the largest connected component, relabeled densely in
/// increasing original order. old_ids, when given, receives the original id of
/// each new vertex.
Graph largest_component(const Graph& g, std::vector<index_t>* old_ids = nullptr);

}  // namespace glap

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "glap/laplacian.hpp"

namespace glap {

enum class GraphFormat { matrix_market, edge_list };

/// ".mtx" selects Matrix Market, everything else an edge list.
GraphFormat format_from_path(const std::filesystem::path& path);
GraphFormat parse_format(const std::string& name);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t zero_weights_dropped = 0;
};

/// Matrix Market coordinate (real/integer/pattern, general/symmetric) or a
/// whitespace edge list "u v [w]" with 0-based ids and '#' comments.
///
/// Diagonal entries are dropped and counted. Explicit zero weights are dropped
/// and counted. Negative weights are a ParseError. In a general Matrix Market
/// file an entry stored in both triangles is one edge whose weight is the mean
/// of the two directions; an entry stored in one triangle is mirrored. Edge
/// list lines are undirected edges and repeated pairs are summed.
LoadedGraph read_graph(std::istream& in, GraphFormat format);
LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format);
LoadedGraph load_graph(const std::filesystem::path& path);

/// Writes "u v w" lines with round-trip precision.
void write_edge_list(std::ostream& out, const Graph& g);
/// Writes the adjacency as a symmetric real Matrix Market file (lower triangle).
void write_matrix_market(std::ostream& out, const Graph& g);

}  // namespace glap

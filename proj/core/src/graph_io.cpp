#include "glap/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace glap {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

index_t parse_index(std::string_view tok, std::size_t line) {
  index_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

double parse_weight(std::string_view tok, std::size_t line) {
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError(line, "expected a finite number, got '" + s + "'");
  }
  return v;
}

struct Record {
  index_t a;  // smaller endpoint
  index_t b;  // larger endpoint
  int direction;
  double w;
};

/// Folds records into canonical edges (u < v, sorted). direction 0 and 1 are
/// the two triangles; a pair present in both is averaged, otherwise summed.
std::vector<Edge> fold(std::vector<Record> recs) {
  std::stable_sort(recs.begin(), recs.end(), [](const Record& x, const Record& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::vector<Edge> edges;
  std::size_t k = 0;
  while (k < recs.size()) {
    const index_t a = recs[k].a;
    const index_t b = recs[k].b;
    double sum[2] = {0.0, 0.0};
    bool seen[2] = {false, false};
    while (k < recs.size() && recs[k].a == a && recs[k].b == b) {
      sum[recs[k].direction] += recs[k].w;
      seen[recs[k].direction] = true;
      ++k;
    }
    const double w = (seen[0] && seen[1]) ? 0.5 * (sum[0] + sum[1]) : sum[0] + sum[1];
    edges.push_back({a, b, w});
  }
  return edges;
}

LoadedGraph read_matrix_market(std::istream& in) {
  LoadedGraph out;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty Matrix Market file");
  ++lineno;
  const auto head = split_ws(line);
  if (head.size() < 5 || head[0] != "%%MatrixMarket" || lower(head[1]) != "matrix") {
    throw ParseError(lineno, "missing %%MatrixMarket matrix header");
  }
  if (lower(head[2]) != "coordinate") throw ParseError(lineno, "only coordinate format is supported");
  const std::string field = lower(head[3]);
  const std::string symmetry = lower(head[4]);
  if (field != "real" && field != "integer" && field != "pattern") {
    throw ParseError(lineno, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");
  }
  const bool pattern = field == "pattern";
  const bool symmetric = symmetry == "symmetric";

  index_t nrows = -1;
  index_t ncols = -1;
  index_t nnz = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '%') continue;
    if (tok.size() != 3) throw ParseError(lineno, "expected 'rows cols entries'");
    nrows = parse_index(tok[0], lineno);
    ncols = parse_index(tok[1], lineno);
    nnz = parse_index(tok[2], lineno);
    break;
  }
  if (nrows < 0) throw ParseError(lineno, "missing size line");
  if (nrows != ncols) {
    throw ParseError(lineno, "matrix is " + std::to_string(nrows) + "x" + std::to_string(ncols) +
                                 ", a graph needs a square matrix");
  }
  if (nnz < 0) throw ParseError(lineno, "negative entry count");

  std::vector<Record> recs;
  recs.reserve(static_cast<std::size_t>(nnz));
  index_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '%') continue;
    if (tok.size() != (pattern ? 2u : 3u)) throw ParseError(lineno, "wrong number of fields");
    const index_t i = parse_index(tok[0], lineno) - 1;
    const index_t j = parse_index(tok[1], lineno) - 1;
    if (i < 0 || i >= nrows || j < 0 || j >= ncols) throw ParseError(lineno, "index out of range");
    const double w = pattern ? 1.0 : parse_weight(tok[2], lineno);
    ++seen;
    if (w < 0.0) throw ParseError(lineno, "negative weight " + std::string(tok[2]));
    if (i == j) {
      ++out.self_loops_dropped;
      continue;
    }
    if (w == 0.0) {
      ++out.zero_weights_dropped;
      continue;
    }
    const int direction = (symmetric || i > j) ? 0 : 1;
    recs.push_back({std::min(i, j), std::max(i, j), direction, w});
  }
  if (seen != nnz) {
    throw ParseError(lineno, "header promises " + std::to_string(nnz) + " entries, found " +
                                 std::to_string(seen));
  }
  out.graph.n = nrows;
  out.graph.edges = fold(std::move(recs));
  return out;
}

LoadedGraph read_edge_list(std::istream& in) {
  LoadedGraph out;
  std::vector<Record> recs;
  index_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tok = split_ws(view);
    if (tok.empty()) continue;
    if (tok.size() != 2 && tok.size() != 3) throw ParseError(lineno, "expected 'u v [w]'");
    const index_t u = parse_index(tok[0], lineno);
    const index_t v = parse_index(tok[1], lineno);
    if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
    const double w = tok.size() == 3 ? parse_weight(tok[2], lineno) : 1.0;
    if (w < 0.0) throw ParseError(lineno, "negative weight " + std::string(tok[2]));
    n = std::max(n, std::max(u, v) + 1);
    if (u == v) {
      ++out.self_loops_dropped;
      continue;
    }
    if (w == 0.0) {
      ++out.zero_weights_dropped;
      continue;
    }
    recs.push_back({std::min(u, v), std::max(u, v), 0, w});
  }
  out.graph.n = n;
  out.graph.edges = fold(std::move(recs));
  return out;
}

}  // namespace

GraphFormat format_from_path(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".mtx" ? GraphFormat::matrix_market
                                                     : GraphFormat::edge_list;
}

GraphFormat parse_format(const std::string& name) {
  const auto s = lower(name);
  if (s == "matrix-market" || s == "mtx" || s == "mm") return GraphFormat::matrix_market;
  if (s == "edge-list" || s == "edges" || s == "el") return GraphFormat::edge_list;
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

LoadedGraph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::matrix_market ? read_matrix_market(in) : read_edge_list(in);
}

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in, format);
}

LoadedGraph load_graph(const std::filesystem::path& path) {
  return load_graph(path, format_from_path(path));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# " << g.n << " vertices, " << g.edges.size() << " edges\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_matrix_market(std::ostream& out, const Graph& g) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << g.n << ' ' << g.n << ' ' << g.edges.size() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : g.edges) {
    out << std::max(e.u, e.v) + 1 << ' ' << std::min(e.u, e.v) + 1 << ' ' << e.w << '\n';
  }
}

}  // namespace glap

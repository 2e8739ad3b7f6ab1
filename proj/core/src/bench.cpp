#include "glap/bench.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "glap/generators.hpp"
#include "glap/krylov.hpp"
#include "glap/rng.hpp"

namespace glap {

std::vector<std::string> suite_names() { return {"small", "desk"}; }

std::vector<Fixture> fixture_suite(const std::string& name) {
  if (name == "small") {
    return {
        {"path_1000", [] { return path_graph(1000); }},
        {"grid2d_32x32", [] { return grid2d_graph(32, 32); }},
        {"grid3d_8x8x8", [] { return grid3d_graph(8, 8, 8); }},
        {"star_500", [] { return star_graph(500); }},
        {"pa_2000_m4", [] { return preferential_attachment_graph(2000, 4, 11); }},
        {"sw_2000_k4", [] { return small_world_graph(2000, 4, 0.1, 12); }},
        {"random_1500", [] { return random_connected_graph(1500, 1500, 13, 0.5, 2.0); }},
    };
  }
  if (name == "desk") {
    return {
        {"path_10000", [] { return path_graph(10000); }},
        {"grid2d_64x64", [] { return grid2d_graph(64, 64); }},
        {"grid3d_16x16x16", [] { return grid3d_graph(16, 16, 16); }},
        {"pa_20000_m4", [] { return preferential_attachment_graph(20000, 4, 1); }},
        {"sw_20000_k4", [] { return small_world_graph(20000, 4, 0.1, 2); }},
    };
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<BenchRow> run_suite(const std::vector<Fixture>& fixtures, const SolverParams& params) {
  std::vector<BenchRow> rows;
  for (const auto& f : fixtures) {
    const Matrix l = laplacian_from_graph(f.make());
    const Hierarchy h = setup_hierarchy(l, params);
    const Vector b = random_rhs(l.nrows(), derive_seed(params.seed, 0xb));
    const SolveResult res = solve(h, b);
    BenchRow row;
    row.graph = f.name;
    row.n = l.nrows();
    row.nnz = l.nnz();
    row.levels = h.num_operators();
    row.iters = res.report.iterations;
    row.converged = res.report.converged;
    row.wda = res.report.wda;
    row.tda = res.report.tda;
    row.opcx = h.operator_complexity();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  auto opt = [](const std::optional<double>& v) {
    if (!v) return std::string();
    std::ostringstream s;
    s << std::setprecision(6) << *v;
    return s.str();
  };
  os << "graph,n,nnz,levels,iters,wda,tda,opcx\n";
  for (const auto& r : rows) {
    os << r.graph << ',' << r.n << ',' << r.nnz << ',' << r.levels << ',' << r.iters << ','
       << opt(r.wda) << ',' << opt(r.tda) << ',' << std::setprecision(6) << r.opcx << '\n';
  }
}

}  // namespace glap

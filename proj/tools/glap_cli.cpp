// glap: command line driver for the Laplacian solver.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "glap/glap.hpp"

namespace {

struct SolveFlags {
  std::string graph;
  std::string format;
  double tol = 1e-8;
  std::string cycle = "v";
  std::uint64_t seed = 0;
  std::string rhs = "random";
  std::string rhs_file;
  glap::index_t max_levels = 40;
  int cheby_degree = 2;
  std::string json_out;
  std::string grid = "1x1";
  bool largest_component = false;
};

glap::SolverParams params_from(const SolveFlags& f) {
  glap::SolverParams p;
  p.tol = f.tol;
  p.cycle = glap::parse_cycle(f.cycle);
  p.seed = f.seed;
  p.max_levels = f.max_levels;
  p.cheby_degree = f.cheby_degree;
  p.grid = glap::parse_grid(f.grid);
  p.validate();
  return p;
}

glap::Matrix load_laplacian(const SolveFlags& f) {
  const auto fmt = f.format.empty() ? glap::format_from_path(f.graph) : glap::parse_format(f.format);
  auto loaded = glap::load_graph(f.graph, fmt);
  if (loaded.self_loops_dropped > 0) {
    std::cerr << "warning: dropped " << loaded.self_loops_dropped << " self-loop entries\n";
  }
  if (loaded.zero_weights_dropped > 0) {
    std::cerr << "warning: dropped " << loaded.zero_weights_dropped << " zero-weight entries\n";
  }
  glap::Graph g = std::move(loaded.graph);
  glap::validate_graph(g);
  glap::Matrix l = glap::laplacian_from_graph(g);
  if (!glap::is_connected(l)) {
    if (!f.largest_component) {
      throw glap::GraphError("graph is disconnected (use --largest-component)");
    }
    const glap::index_t before = g.n;
    g = glap::largest_component(g);
    std::cerr << "warning: kept largest component (" << g.n << " of " << before << " vertices)\n";
    l = glap::laplacian_from_graph(g);
  }
  return l;
}

glap::Vector read_rhs(const std::string& path, glap::index_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rhs file " + path);
  glap::Vector b;
  double v = 0.0;
  while (in >> v) b.push_back(v);
  if (!in.eof()) throw std::runtime_error("rhs file " + path + ": non-numeric entry");
  if (static_cast<glap::index_t>(b.size()) != n) {
    throw std::runtime_error("rhs file has " + std::to_string(b.size()) + " entries, graph has " +
                             std::to_string(n) + " vertices");
  }
  glap::remove_mean(b);
  return b;
}

void print_table(const glap::Hierarchy& h) {
  std::cout << "level  kind         n          nnz\n";
  const auto table = h.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::cout << std::left << std::setw(7) << i << std::setw(13) << table[i].kind << std::setw(11)
              << table[i].n << table[i].nnz << '\n';
  }
  std::cout << std::right << "operator complexity " << std::setprecision(4) << h.operator_complexity()
            << '\n';
  for (const auto& w : h.warnings) std::cerr << "warning: " << w << '\n';
}

int run_solve(const SolveFlags& f) {
  const auto params = params_from(f);
  const glap::Matrix l = load_laplacian(f);
  const glap::Hierarchy h = glap::setup_hierarchy(l, params);
  glap::Vector b;
  if (f.rhs == "random") {
    b = glap::random_rhs(l.nrows(), glap::derive_seed(f.seed, 0xb));
  } else if (f.rhs == "file") {
    if (f.rhs_file.empty()) throw std::runtime_error("--rhs file needs --rhs-file");
    b = read_rhs(f.rhs_file, l.nrows());
  } else {
    throw std::runtime_error("unknown --rhs '" + f.rhs + "'");
  }
  auto res = glap::solve(h, b);
  res.report.graph = f.graph;
  const auto& rep = res.report;
  std::cout << "n " << rep.n << "  nnz " << rep.nnz << "  levels " << rep.levels.size()
            << "  opcx " << std::setprecision(4) << rep.operator_complexity << '\n';
  std::cout << "iterations " << rep.iterations << "  relres " << std::setprecision(3)
            << std::scientific << rep.relative_residual() << std::defaultfloat << "  wda ";
  if (rep.wda) std::cout << std::setprecision(4) << *rep.wda; else std::cout << "-";
  std::cout << "  setup " << std::setprecision(3) << rep.setup_seconds << "s  solve "
            << rep.solve_seconds << "s\n";
  if (!f.json_out.empty()) {
    std::ofstream out(f.json_out);
    if (!out) throw std::runtime_error("cannot write " + f.json_out);
    out << glap::to_json(rep) << '\n';
  }
  if (!rep.converged) {
    std::cerr << "error: did not converge in " << rep.iterations << " iterations\n";
    return 2;
  }
  return 0;
}

int run_hierarchy(const SolveFlags& f) {
  const auto params = params_from(f);
  const glap::Matrix l = load_laplacian(f);
  const glap::Hierarchy h = glap::setup_hierarchy(l, params);
  print_table(h);
  return 0;
}

int run_bench(const std::string& suite, const std::string& csv, const SolveFlags& f) {
  const auto params = params_from(f);
  const auto rows = glap::run_suite(glap::fixture_suite(suite), params);
  if (csv.empty() || csv == "-") {
    glap::write_csv(std::cout, rows);
  } else {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write " + csv);
    glap::write_csv(out, rows);
    glap::write_csv(std::cout, rows);
  }
  for (const auto& r : rows) {
    if (!r.converged) return 2;
  }
  return 0;
}

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--tol", f.tol, "Relative residual tolerance")->capture_default_str();
  cmd->add_option("--cycle", f.cycle, "v (CG + V-cycle) or k (FCG + K-cycle)")
      ->check(CLI::IsMember({"v", "V", "k", "K"}))
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for layout, test vectors and rhs")->capture_default_str();
  cmd->add_option("--max-levels", f.max_levels, "Maximum number of operators")->capture_default_str();
  cmd->add_option("--cheby-degree", f.cheby_degree, "Chebyshev smoother degree")->capture_default_str();
  cmd->add_option("--grid", f.grid, "Block grid shape RxC for the setup kernels")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph Laplacian solver: aggregation multigrid with low-degree elimination"};
  app.require_subcommand(1);
  SolveFlags f;
  std::string suite = "small";
  std::string csv;

  auto* solve = app.add_subcommand("solve", "Solve L x = b for a graph file");
  solve->add_option("graph", f.graph, "Graph file (.mtx or edge list)")->required();
  solve->add_option("--format", f.format, "mtx or edges (default: from extension)");
  add_solver_flags(solve, f);
  solve->add_option("--rhs", f.rhs, "random or file")->check(CLI::IsMember({"random", "file"}));
  solve->add_option("--rhs-file", f.rhs_file, "Whitespace separated right-hand side");
  solve->add_option("--json", f.json_out, "Write the solve report as JSON");
  solve->add_flag("--largest-component", f.largest_component, "Solve on the largest component");

  auto* hier = app.add_subcommand("hierarchy", "Print the multigrid hierarchy of a graph");
  hier->add_option("graph", f.graph, "Graph file (.mtx or edge list)")->required();
  hier->add_option("--format", f.format, "mtx or edges (default: from extension)");
  add_solver_flags(hier, f);
  hier->add_flag("--largest-component", f.largest_component, "Use the largest component");

  auto* bench = app.add_subcommand("bench", "Run a fixture suite and report WDA/TDA as CSV");
  bench->add_option("--suite", suite, "small or desk")->check(CLI::IsMember(glap::suite_names()))
      ->capture_default_str();
  bench->add_option("--csv", csv, "Output CSV path (default: stdout)");
  add_solver_flags(bench, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*solve) return run_solve(f);
    if (*hier) return run_hierarchy(f);
    if (*bench) return run_bench(suite, csv, f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "glap/hierarchy.hpp"
#include "glap/laplacian.hpp"

namespace glap {

struct Fixture {
  std::string name;
  std::function<Graph()> make;
};

/// Named fixture suites: "small" (quick, a few thousand vertices each) and
/// "desk" (path P10000, 64x64 grid, 16^3 grid, preferential attachment and
/// small-world graphs on 20000 vertices). Throws std::invalid_argument for an
/// unknown name.
std::vector<Fixture> fixture_suite(const std::string& name);
std::vector<std::string> suite_names();

struct BenchRow {
  std::string graph;
  index_t n = 0;
  index_t nnz = 0;
  index_t levels = 0;
  int iters = 0;
  bool converged = false;
  std::optional<double> wda;
  std::optional<double> tda;
  double opcx = 0.0;
};

/// Sets up and solves every fixture with a seeded random zero-mean right-hand
/// side.
std::vector<BenchRow> run_suite(const std::vector<Fixture>& fixtures, const SolverParams& params);

/// CSV with header graph,n,nnz,levels,iters,wda,tda,opcx. Undefined WDA/TDA
/// are written as empty fields.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace glap

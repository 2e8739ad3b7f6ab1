#include "glap/report.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace glap {

using nlohmann::json;

namespace {

json params_json(const SolverParams& p) {
  return {
      {"tol", p.tol},
      {"cycle", to_string(p.cycle)},
      {"cheby_degree", p.cheby_degree},
      {"pre_sweeps", p.pre_sweeps},
      {"post_sweeps", p.post_sweeps},
      {"elim_gate", p.elim_gate},
      {"elim_max_degree", p.elim_max_degree},
      {"elim_rounds", p.elim_rounds},
      {"vote_threshold", p.vote_threshold},
      {"voting_rounds", p.voting_rounds},
      {"max_levels", p.max_levels},
      {"coarse_nnz", p.coarse_nnz},
      {"test_vectors", p.test_vectors},
      {"test_sweeps", p.test_sweeps},
      {"test_omega", p.test_omega},
      {"lanczos_iters", p.lanczos_iters},
      {"cheby_lo", p.cheby_lo},
      {"cheby_hi", p.cheby_hi},
      {"jacobi", p.jacobi},
      {"kcycle_inner", p.kcycle_inner},
      {"max_iterations", p.max_iterations},
      {"dense_limit", p.dense_limit},
      {"coarse_sweeps", p.coarse_sweeps},
      {"seed", p.seed},
      {"grid", to_string(p.grid)},
      {"randomize", p.randomize},
  };
}

SolverParams params_from(const json& j) {
  SolverParams p;
  p.tol = j.at("tol").get<double>();
  p.cycle = parse_cycle(j.at("cycle").get<std::string>());
  p.cheby_degree = j.at("cheby_degree").get<int>();
  p.pre_sweeps = j.at("pre_sweeps").get<int>();
  p.post_sweeps = j.at("post_sweeps").get<int>();
  p.elim_gate = j.at("elim_gate").get<double>();
  p.elim_max_degree = j.at("elim_max_degree").get<index_t>();
  p.elim_rounds = j.at("elim_rounds").get<int>();
  p.vote_threshold = j.at("vote_threshold").get<index_t>();
  p.voting_rounds = j.at("voting_rounds").get<int>();
  p.max_levels = j.at("max_levels").get<index_t>();
  p.coarse_nnz = j.at("coarse_nnz").get<index_t>();
  p.test_vectors = j.at("test_vectors").get<index_t>();
  p.test_sweeps = j.at("test_sweeps").get<int>();
  p.test_omega = j.at("test_omega").get<double>();
  p.lanczos_iters = j.at("lanczos_iters").get<int>();
  p.cheby_lo = j.at("cheby_lo").get<double>();
  p.cheby_hi = j.at("cheby_hi").get<double>();
  p.jacobi = j.at("jacobi").get<bool>();
  p.kcycle_inner = j.at("kcycle_inner").get<int>();
  p.max_iterations = j.at("max_iterations").get<int>();
  p.dense_limit = j.at("dense_limit").get<index_t>();
  p.coarse_sweeps = j.at("coarse_sweeps").get<int>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.grid = parse_grid(j.at("grid").get<std::string>());
  p.randomize = j.at("randomize").get<bool>();
  return p;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

std::string to_json(const SolveReport& r, int indent) {
  json levels = json::array();
  for (const auto& l : r.levels) levels.push_back({{"kind", l.kind}, {"n", l.n}, {"nnz", l.nnz}});
  const json j = {
      {"schema_version", kReportSchemaVersion},
      {"graph", r.graph},
      {"n", r.n},
      {"nnz", r.nnz},
      {"params", params_json(r.params)},
      {"levels", levels},
      {"residuals", r.residuals},
      {"iterations", r.iterations},
      {"converged", r.converged},
      {"work_units", r.work_units},
      {"coarse_visits", r.coarse_visits},
      {"wda", optional_json(r.wda)},
      {"tda", optional_json(r.tda)},
      {"setup_seconds", r.setup_seconds},
      {"solve_seconds", r.solve_seconds},
      {"operator_complexity", r.operator_complexity},
      {"true_relative_residual", r.true_relative_residual},
  };
  return j.dump(indent);
}

SolveReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const int version = j.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      throw std::invalid_argument("unsupported report schema version " + std::to_string(version));
    }
    SolveReport r;
    r.graph = j.at("graph").get<std::string>();
    r.n = j.at("n").get<index_t>();
    r.nnz = j.at("nnz").get<index_t>();
    r.params = params_from(j.at("params"));
    for (const auto& l : j.at("levels")) {
      r.levels.push_back({l.at("kind").get<std::string>(), l.at("n").get<index_t>(),
                          l.at("nnz").get<index_t>()});
    }
    r.residuals = j.at("residuals").get<std::vector<double>>();
    r.iterations = j.at("iterations").get<int>();
    r.converged = j.at("converged").get<bool>();
    r.work_units = j.at("work_units").get<double>();
    r.coarse_visits = j.at("coarse_visits").get<index_t>();
    r.wda = optional_from(j.at("wda"));
    r.tda = optional_from(j.at("tda"));
    r.setup_seconds = j.at("setup_seconds").get<double>();
    r.solve_seconds = j.at("solve_seconds").get<double>();
    r.operator_complexity = j.at("operator_complexity").get<double>();
    r.true_relative_residual = j.at("true_relative_residual").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed solve report: ") + e.what());
  }
}

}  // namespace glap

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glap/hierarchy.hpp"

namespace glap {

inline constexpr int kReportSchemaVersion = 1;

struct SolveReport {
  std::string graph;
  index_t n = 0;
  index_t nnz = 0;
  SolverParams params;
  std::vector<LevelInfo> levels;
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
  double work_units = 0.0;
  index_t coarse_visits = 0;
  std::optional<double> wda;
  std::optional<double> tda;
  double setup_seconds = 0.0;
  double solve_seconds = 0.0;
  double operator_complexity = 1.0;
  /// ||b - L x|| / ||b|| recomputed from the returned iterate.
  double true_relative_residual = 0.0;

  double relative_residual() const {
    return residuals.empty() || residuals.front() == 0.0 ? 0.0
                                                         : residuals.back() / residuals.front();
  }
};

std::string to_json(const SolveReport& r, int indent = 2);
/// Inverse of to_json. Throws std::invalid_argument on malformed input or an
/// unsupported schema version.
SolveReport report_from_json(std::string_view text);

}  // namespace glap

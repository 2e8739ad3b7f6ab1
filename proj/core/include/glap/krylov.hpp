#pragma once

#include <cstdint>
#include <span>

#include "glap/hierarchy.hpp"
#include "glap/report.hpp"
#include "glap/vector_ops.hpp"

namespace glap {

struct SolveResult {
  Vector x;
  SolveReport report;
};

/// Conjugate gradient preconditioned by one V-cycle. b is projected against
/// the constant vector first; r and x are re-projected every iteration. Stops
/// at ||r|| <= tol ||r_0|| or after max_iterations.
SolveResult pcg_solve(const Hierarchy& h, std::span<const double> b);

/// Flexible CG (one stored direction) preconditioned by the K-cycle.
SolveResult kcycle_solve(const Hierarchy& h, std::span<const double> b);

/// pcg_solve or kcycle_solve according to h.params.cycle.
SolveResult solve(const Hierarchy& h, std::span<const double> b);

/// Seeded unit-normal vector with its mean removed.
Vector random_rhs(index_t n, std::uint64_t seed);

}  // namespace glap

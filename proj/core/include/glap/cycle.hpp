#pragma once

#include <span>

#include "glap/hierarchy.hpp"
#include "glap/vector_ops.hpp"
#include "glap/work.hpp"

namespace glap {

/// One multigrid cycle with index gamma on operator l, updating x. Aggregation
/// levels smooth, restrict, recurse gamma times from zero and correct.
/// Elimination levels transfer exactly and do not smooth. The coarsest
/// operator is solved directly.
void mgcycle(const Hierarchy& h, index_t l, std::span<double> x, std::span<const double> b,
             int gamma, WorkCounter* work = nullptr);

/// M b for the V-cycle preconditioner (one cycle from a zero guess on L_0).
Vector vcycle(const Hierarchy& h, std::span<const double> b, WorkCounter* work = nullptr);

/// K-cycle preconditioner on operator l from a zero guess: like a V-cycle,
/// but the coarse problem below each aggregation level is solved by
/// kcycle_inner flexible CG iterations preconditioned by the next K-cycle.
Vector kcycle(const Hierarchy& h, index_t l, std::span<const double> b,
              WorkCounter* work = nullptr);

}  // namespace glap

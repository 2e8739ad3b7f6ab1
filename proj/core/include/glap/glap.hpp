#pragma once

#include "glap/aggregation.hpp"
#include "glap/bench.hpp"
#include "glap/cycle.hpp"
#include "glap/dist_matrix.hpp"
#include "glap/elimination.hpp"
#include "glap/generators.hpp"
#include "glap/graph_io.hpp"
#include "glap/hierarchy.hpp"
#include "glap/krylov.hpp"
#include "glap/laplacian.hpp"
#include "glap/metrics.hpp"
#include "glap/permutation.hpp"
#include "glap/report.hpp"
#include "glap/rng.hpp"
#include "glap/semiring.hpp"
#include "glap/smoother.hpp"
#include "glap/sparse_matrix.hpp"
#include "glap/strength.hpp"
#include "glap/vector_ops.hpp"
#include "glap/work.hpp"

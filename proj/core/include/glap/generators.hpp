#pragma once

#include <cstdint>

#include "glap/laplacian.hpp"

namespace glap {

/// Unit-weight path 0 - 1 - ... - (n-1).
Graph path_graph(index_t n);
/// nx x ny 5-point lattice.
Graph grid2d_graph(index_t nx, index_t ny);
/// nx x ny x nz 7-point lattice.
Graph grid3d_graph(index_t nx, index_t ny, index_t nz);
/// Vertex 0 joined to `leaves` leaves.
Graph star_graph(index_t leaves);
Graph complete_graph(index_t n);

/// Preferential attachment: starts from a clique on m + 1 vertices and joins
/// each new vertex to m distinct earlier vertices chosen proportionally to
/// degree. Average degree approaches 2m. Always connected.
Graph preferential_attachment_graph(index_t n, index_t m, std::uint64_t seed);

/// Ring lattice linking every vertex to its k nearest neighbors on each side,
/// plus one random shortcut per lattice edge with probability p. Keeping the
/// lattice guarantees connectivity.
Graph small_world_graph(index_t n, index_t k, double p, std::uint64_t seed);

/// Random spanning tree (each vertex i > 0 attached to a uniform earlier
/// vertex) plus `extra` random edges; weights uniform in [w_lo, w_hi].
/// Degrees are mixed: the tree leaves many low-degree vertices.
Graph random_connected_graph(index_t n, index_t extra, std::uint64_t seed, double w_lo = 1.0,
                             double w_hi = 1.0);

/// Merges parallel edges (summing weights) and orders edges by (u, v) with u < v.
Graph canonicalize(Graph g);

}  // namespace glap

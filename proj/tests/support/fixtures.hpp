// Fixture corpora shared by the unit and acceptance tests.
#pragma once

#include <string>
#include <vector>

#include "glap/bench.hpp"
#include "glap/generators.hpp"
#include "glap/laplacian.hpp"
#include "glap/rng.hpp"

namespace glap::fixtures {

struct Named {
  std::string name;
  Graph graph;
};

inline Graph p3() { return Graph{3, {{0, 1, 1.0}, {1, 2, 1.0}}}; }
inline Graph star6() { return star_graph(5); }

/// Small connected graphs of mixed degree: a random tree, random extra
/// edges, and every third graph a hub touching a third of the vertices.
inline std::vector<Graph> random_corpus(int count = 50, std::uint64_t seed = 2024) {
  std::vector<Graph> out;
  for (int s = 0; s < count; ++s) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    const auto n = static_cast<index_t>(8 + rng.below(53));
    const auto extra = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(2 * n)));
    Graph g = random_connected_graph(n, extra, rng.next(), 0.5, 3.0);
    if (s % 3 == 0) {
      const index_t hub = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(n)));
      for (index_t v = 0; v < n; ++v) {
        if (v != hub && rng.below(3) == 0) g.edges.push_back({hub, v, rng.uniform(0.5, 3.0)});
      }
      g = canonicalize(std::move(g));
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Twenty structured and random graphs large enough to build several levels.
inline std::vector<Named> distribution_fixtures() {
  return {
      {"path_50", path_graph(50)},
      {"path_1000", path_graph(1000)},
      {"grid2d_10x10", grid2d_graph(10, 10)},
      {"grid2d_32x32", grid2d_graph(32, 32)},
      {"grid2d_20x50", grid2d_graph(20, 50)},
      {"grid3d_6", grid3d_graph(6, 6, 6)},
      {"grid3d_8", grid3d_graph(8, 8, 8)},
      {"star_30", star_graph(30)},
      {"star_500", star_graph(500)},
      {"complete_12", complete_graph(12)},
      {"pa_300_m2", preferential_attachment_graph(300, 2, 1)},
      {"pa_1000_m4", preferential_attachment_graph(1000, 4, 2)},
      {"pa_2000_m1", preferential_attachment_graph(2000, 1, 10)},
      {"sw_300_k2", small_world_graph(300, 2, 0.1, 3)},
      {"sw_1000_k4", small_world_graph(1000, 4, 0.1, 4)},
      {"random_60", random_connected_graph(60, 30, 9, 0.5, 3.0)},
      {"random_200", random_connected_graph(200, 100, 5)},
      {"random_400_w", random_connected_graph(400, 400, 6, 0.1, 10.0)},
      {"random_800", random_connected_graph(800, 200, 7)},
      {"random_1000_w", random_connected_graph(1000, 1000, 8, 0.5, 2.0)},
  };
}

/// The convergence fixtures, shared with the "desk" bench suite.
inline std::vector<Named> desk_fixtures() {
  std::vector<Named> out;
  for (const auto& f : fixture_suite("desk")) out.push_back({f.name, f.make()});
  return out;
}

}  // namespace glap::fixtures

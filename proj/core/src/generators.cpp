#include "glap/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "glap/rng.hpp"

namespace glap {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph canonicalize(Graph g) {
  for (auto& e : g.edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(g.edges.begin(), g.edges.end(),
                   [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  std::vector<Edge> out;
  out.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (!out.empty() && out.back().u == e.u && out.back().v == e.v) {
      out.back().w += e.w;
    } else {
      out.push_back(e);
    }
  }
  g.edges = std::move(out);
  return g;
}

Graph path_graph(index_t n) {
  require(n >= 1, "path_graph: n must be positive");
  Graph g{n, {}};
  for (index_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, 1.0});
  return g;
}

Graph grid2d_graph(index_t nx, index_t ny) {
  require(nx >= 1 && ny >= 1, "grid2d_graph: dimensions must be positive");
  Graph g{nx * ny, {}};
  auto id = [nx](index_t x, index_t y) { return y * nx + x; };
  for (index_t y = 0; y < ny; ++y) {
    for (index_t x = 0; x < nx; ++x) {
      if (x + 1 < nx) g.edges.push_back({id(x, y), id(x + 1, y), 1.0});
      if (y + 1 < ny) g.edges.push_back({id(x, y), id(x, y + 1), 1.0});
    }
  }
  return canonicalize(std::move(g));
}

Graph grid3d_graph(index_t nx, index_t ny, index_t nz) {
  require(nx >= 1 && ny >= 1 && nz >= 1, "grid3d_graph: dimensions must be positive");
  Graph g{nx * ny * nz, {}};
  auto id = [nx, ny](index_t x, index_t y, index_t z) { return (z * ny + y) * nx + x; };
  for (index_t z = 0; z < nz; ++z) {
    for (index_t y = 0; y < ny; ++y) {
      for (index_t x = 0; x < nx; ++x) {
        if (x + 1 < nx) g.edges.push_back({id(x, y, z), id(x + 1, y, z), 1.0});
        if (y + 1 < ny) g.edges.push_back({id(x, y, z), id(x, y + 1, z), 1.0});
        if (z + 1 < nz) g.edges.push_back({id(x, y, z), id(x, y, z + 1), 1.0});
      }
    }
  }
  return canonicalize(std::move(g));
}

Graph star_graph(index_t leaves) {
  require(leaves >= 0, "star_graph: negative leaf count");
  Graph g{leaves + 1, {}};
  for (index_t i = 1; i <= leaves; ++i) g.edges.push_back({0, i, 1.0});
  return g;
}

Graph complete_graph(index_t n) {
  require(n >= 1, "complete_graph: n must be positive");
  Graph g{n, {}};
  for (index_t i = 0; i < n; ++i) {
    for (index_t j = i + 1; j < n; ++j) g.edges.push_back({i, j, 1.0});
  }
  return g;
}

Graph preferential_attachment_graph(index_t n, index_t m, std::uint64_t seed) {
  require(m >= 1 && n >= m + 1, "preferential_attachment_graph: need n > m >= 1");
  SplitMix64 rng(seed);
  Graph g{n, {}};
  // Each vertex appears in `ends` once per incident edge, so a uniform pick
  // from it is a degree-proportional pick.
  std::vector<index_t> ends;
  ends.reserve(static_cast<std::size_t>(2 * n * m));
  for (index_t i = 0; i <= m; ++i) {
    for (index_t j = i + 1; j <= m; ++j) {
      g.edges.push_back({i, j, 1.0});
      ends.push_back(i);
      ends.push_back(j);
    }
  }
  std::vector<index_t> targets;
  for (index_t v = m + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<index_t>(targets.size()) < m) {
      const index_t t = ends[static_cast<std::size_t>(rng.below(ends.size()))];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (const index_t t : targets) {
      g.edges.push_back({t, v, 1.0});
      ends.push_back(t);
      ends.push_back(v);
    }
  }
  return canonicalize(std::move(g));
}

Graph small_world_graph(index_t n, index_t k, double p, std::uint64_t seed) {
  require(k >= 1 && n > 2 * k, "small_world_graph: need n > 2k >= 2");
  require(p >= 0.0 && p <= 1.0, "small_world_graph: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  Graph g{n, {}};
  for (index_t i = 0; i < n; ++i) {
    for (index_t d = 1; d <= k; ++d) {
      g.edges.push_back({i, (i + d) % n, 1.0});
      if (rng.uniform01() < p) {
        index_t u = i;
        index_t v = i;
        while (v == u) v = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(n)));
        g.edges.push_back({u, v, 1.0});
      }
    }
  }
  return canonicalize(std::move(g));
}

Graph random_connected_graph(index_t n, index_t extra, std::uint64_t seed, double w_lo,
                             double w_hi) {
  require(n >= 1 && extra >= 0, "random_connected_graph: bad size");
  require(w_lo > 0.0 && w_hi >= w_lo, "random_connected_graph: need 0 < w_lo <= w_hi");
  SplitMix64 rng(seed);
  auto weight = [&] { return w_lo == w_hi ? w_lo : rng.uniform(w_lo, w_hi); };
  Graph g{n, {}};
  for (index_t i = 1; i < n; ++i) {
    const auto parent = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(i)));
    g.edges.push_back({parent, i, weight()});
  }
  if (n >= 2) {
    for (index_t e = 0; e < extra; ++e) {
      const auto u = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(n)));
      auto v = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (v >= u) ++v;
      g.edges.push_back({u, v, weight()});
    }
  }
  return canonicalize(std::move(g));
}

}  // namespace glap

#include "glap/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "glap/rng.hpp"

namespace glap {

Permutation Permutation::identity(index_t n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative size");
  Permutation p;
  p.forward_.resize(static_cast<std::size_t>(n));
  std::iota(p.forward_.begin(), p.forward_.end(), index_t{0});
  p.inverse_ = p.forward_;
  return p;
}

Permutation Permutation::from_forward(std::vector<index_t> forward) {
  const auto n = static_cast<index_t>(forward.size());
  std::vector<index_t> inverse(forward.size(), -1);
  for (index_t i = 0; i < n; ++i) {
    const auto f = forward[static_cast<std::size_t>(i)];
    if (f < 0 || f >= n || inverse[static_cast<std::size_t>(f)] != -1) {
      throw std::invalid_argument("Permutation: not a bijection");
    }
    inverse[static_cast<std::size_t>(f)] = i;
  }
  Permutation p;
  p.forward_ = std::move(forward);
  p.inverse_ = std::move(inverse);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (forward_[i] != static_cast<index_t>(i)) return false;
  }
  return true;
}

Permutation random_permutation(index_t n, std::uint64_t seed) {
  auto p = Permutation::identity(n);
  std::vector<index_t> order(p.forward_map().begin(), p.forward_map().end());
  SplitMix64 rng(seed);
  for (index_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<index_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return Permutation::from_forward(std::move(order));
}

}  // namespace glap

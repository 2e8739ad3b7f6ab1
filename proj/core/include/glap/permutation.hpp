#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glap/types.hpp"

namespace glap {

/// A bijection on [0, n). forward(i) is the new position of element i;
/// inverse(k) is the element stored at position k.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(index_t n);
  /// Throws std::invalid_argument if `forward` is not a bijection on [0, n).
  static Permutation from_forward(std::vector<index_t> forward);

  index_t size() const noexcept { return static_cast<index_t>(forward_.size()); }
  bool empty() const noexcept { return forward_.empty(); }

  index_t operator()(index_t i) const { return forward_[static_cast<std::size_t>(i)]; }
  index_t inverse(index_t k) const { return inverse_[static_cast<std::size_t>(k)]; }

  std::span<const index_t> forward_map() const noexcept { return forward_; }
  std::span<const index_t> inverse_map() const noexcept { return inverse_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<index_t> forward_;
  std::vector<index_t> inverse_;
};

/// Fisher-Yates shuffle driven by SplitMix64(seed). Same (n, seed) gives the
/// same permutation on every platform.
Permutation random_permutation(index_t n, std::uint64_t seed);

}  // namespace glap

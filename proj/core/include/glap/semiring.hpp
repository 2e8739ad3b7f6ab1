#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>

namespace glap {

/// A generalized product: combine maps (matrix entry, input element) to an
/// output element and reduce folds output elements. reduce must be associative
/// and commutative with identity() as its neutral element; that is what lets a
/// row be reduced in any block order.
template <class SR, class E, class VIn>
concept Semiring = requires(const SR& sr, const E& a, const VIn& v,
                            const typename SR::value_type& x) {
  typename SR::value_type;
  { sr.identity() } -> std::convertible_to<typename SR::value_type>;
  { sr.combine(a, v) } -> std::convertible_to<typename SR::value_type>;
  { sr.reduce(x, x) } -> std::convertible_to<typename SR::value_type>;
};

struct PlusTimes {
  using value_type = double;
  static constexpr double identity() noexcept { return 0.0; }
  static constexpr double combine(double a, double v) noexcept { return a * v; }
  static constexpr double reduce(double x, double y) noexcept { return x + y; }
};

struct MinPlus {
  using value_type = double;
  static constexpr double identity() noexcept { return std::numeric_limits<double>::infinity(); }
  static constexpr double combine(double a, double v) noexcept { return a + v; }
  static constexpr double reduce(double x, double y) noexcept { return std::min(x, y); }
};

/// max over a_ij * v_j; exact under any reduction order.
struct MaxTimes {
  using value_type = double;
  static constexpr double identity() noexcept { return -std::numeric_limits<double>::infinity(); }
  static constexpr double combine(double a, double v) noexcept { return a * v; }
  static constexpr double reduce(double x, double y) noexcept { return std::max(x, y); }
};

/// Boolean pattern product on bytes: any stored entry passes v_j through.
struct OrAnd {
  using value_type = std::uint8_t;
  static constexpr std::uint8_t identity() noexcept { return 0; }
  template <class E>
  static constexpr std::uint8_t combine(const E&, std::uint8_t v) noexcept { return v; }
  static constexpr std::uint8_t reduce(std::uint8_t x, std::uint8_t y) noexcept { return x | y; }
};

}  // namespace glap

#pragma once

#include <optional>

namespace glap {

/// Work per digit of accuracy, -work / log10(r_final / r_initial). Empty when
/// no digits were gained (r_final >= r_initial) or r_initial is not positive.
std::optional<double> wda(double r_initial, double r_final, double work);

/// Time per digit of accuracy, same convention with seconds in place of work.
std::optional<double> tda(double r_initial, double r_final, double seconds);

}  // namespace glap

#include "glap/metrics.hpp"

#include <cmath>

namespace glap {

namespace {

std::optional<double> per_digit(double r_initial, double r_final, double amount) {
  if (!(r_initial > 0.0) || !(r_final >= 0.0) || !(r_final < r_initial)) return std::nullopt;
  if (r_final == 0.0) return 0.0;
  return -amount / std::log10(r_final / r_initial);
}

}  // namespace

std::optional<double> wda(double r_initial, double r_final, double work) {
  return per_digit(r_initial, r_final, work);
}

std::optional<double> tda(double r_initial, double r_final, double seconds) {
  return per_digit(r_initial, r_final, seconds);
}

}  // namespace glap

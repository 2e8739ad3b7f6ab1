#pragma once

#include <cstdint>

namespace glap {

/// Signed index used for vertices, rows and columns throughout the library.
using index_t = std::int64_t;

}  // namespace glap

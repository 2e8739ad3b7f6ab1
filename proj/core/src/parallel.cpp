#include "glap/parallel.hpp"

#include <cstdlib>
#include <string>

namespace glap {

int num_threads() {
  static const int cached = [] {
    const char* env = std::getenv("GLAP_NUM_THREADS");
    if (env == nullptr) return 1;
    try {
      const int n = std::stoi(env);
      return n > 0 ? n : 1;
    } catch (const std::exception&) {
      return 1;
    }
  }();
  return cached;
}

}  // namespace glap

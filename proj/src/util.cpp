#include "primal/util.hpp"

#include <cstdlib>
#include <string>

namespace primal {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("PRIMAL_MAX_WORKERS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // Unparseable values leave the default in place.
    }
  }
  return n;
}

}  // namespace primal

#include "reconkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace reconkit {

std::size_t worker_count() {
  if (const char* env = std::getenv("RECONKIT_THREADS")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const unsigned long value = std::stoul(text, &used);
      if (used == text.size() && value > 0) {
        return value;
      }
    } catch (const std::exception&) {
      // Fall through to the hardware default.
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace reconkit

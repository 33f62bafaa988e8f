#include "invcensus/parallel.hpp"

namespace invcensus {

unsigned& thread_limit() {
  static unsigned limit = std::max(1u, std::thread::hardware_concurrency());
  return limit;
}

}  // namespace invcensus

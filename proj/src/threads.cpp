#include "hardychain/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace hardychain {

int effective_threads() {
  int n = omp_get_max_threads();
  if (const char* cap = std::getenv("HARDY_CHAIN_THREADS")) {
    try {
      int requested = std::stoi(cap);
      if (requested >= 1 && requested < n) n = requested;
    } catch (...) {
      // Unparseable cap: ignore and use the runtime default.
    }
  }
  return n < 1 ? 1 : n;
}

}  // namespace hardychain

// Compares the OpenMP kernels against their serial reference
// implementations: strategy enumeration, bound-table generation, and
// per-pair outcome sampling. Results must agree exactly; only the wall
// time differs.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "hardychain/bounds.hpp"
#include "hardychain/quantum.hpp"
#include "hardychain/simulate.hpp"
#include "hardychain/threads.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              match ? "results match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", hardychain::effective_threads());

  // Warm up the allocator and thread pool so first-run noise stays out of
  // the measurements.
  hardychain::lr_max_chsh(6);
  hardychain::bounds_dataset(50);

  {
    const int k = 11;
    auto t0 = Clock::now();
    auto serial = hardychain::lr_max_chsh_serial(k);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = hardychain::lr_max_chsh(k);
    double parallel_ms = ms_since(t0);
    bool match = serial.max_value == parallel.max_value &&
                 serial.witness.encoding() == parallel.witness.encoding();
    report("lr enumeration (K=11)", serial_ms, parallel_ms, match);
  }

  {
    const int k_max = 3000;
    auto t0 = Clock::now();
    auto serial = hardychain::bounds_dataset_serial(k_max);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = hardychain::bounds_dataset(k_max);
    double parallel_ms = ms_since(t0);
    bool match = true;
    for (int i = 0; i < k_max; ++i) {
      match = match && serial[i].l_k == parallel[i].l_k &&
              serial[i].p_max_qm == parallel[i].p_max_qm &&
              serial[i].x_star == parallel[i].x_star;
    }
    report("bounds dataset (k_max=3000)", serial_ms, parallel_ms, match);
  }

  {
    auto b = hardychain::born_behavior(0.5, 7);
    const std::uint64_t shots = 200000;
    auto t0 = Clock::now();
    auto serial = hardychain::sample_counts_serial(b, shots, 12345);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = hardychain::sample_counts(b, shots, 12345);
    double parallel_ms = ms_since(t0);
    report("sampling (K=7, 2e5 shots)", serial_ms, parallel_ms,
           serial.counts == parallel.counts);
  }

  return 0;
}

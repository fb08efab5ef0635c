#include <doctest.h>

#include <cstdlib>

#include "hardychain/bounds.hpp"
#include "hardychain/quantum.hpp"
#include "hardychain/simulate.hpp"
#include "hardychain/threads.hpp"

using namespace hardychain;

TEST_CASE("parallel and serial lr enumeration agree, including the witness") {
  for (int k_param = 1; k_param <= 8; ++k_param) {
    LrMaxResult serial = lr_max_chsh_serial(k_param);
    LrMaxResult parallel = lr_max_chsh(k_param);
    CHECK(serial.max_value == parallel.max_value);
    CHECK(serial.witness.encoding() == parallel.witness.encoding());
  }
}

TEST_CASE("parallel and serial bound datasets are bitwise identical") {
  std::vector<BoundsRecord> serial = bounds_dataset_serial(200);
  std::vector<BoundsRecord> parallel = bounds_dataset(200);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].k_param == parallel[i].k_param);
    CHECK(serial[i].tsirelson == parallel[i].tsirelson);
    CHECK(serial[i].l_k == parallel[i].l_k);
    CHECK(serial[i].p_max_qm == parallel[i].p_max_qm);
    CHECK(serial[i].x_star == parallel[i].x_star);
  }
}

TEST_CASE("parallel and serial samplers produce identical counts") {
  Behavior b = born_behavior(0.35, 3);
  CountsTable serial = sample_counts_serial(b, 20000, 777);
  CountsTable parallel = sample_counts(b, 20000, 777);
  CHECK(serial.counts == parallel.counts);
}

TEST_CASE("HARDY_CHAIN_THREADS caps the thread count without changing results") {
  LrMaxResult unbounded = lr_max_chsh(6);

  setenv("HARDY_CHAIN_THREADS", "1", 1);
  CHECK(effective_threads() == 1);
  LrMaxResult capped = lr_max_chsh(6);
  unsetenv("HARDY_CHAIN_THREADS");

  CHECK(capped.max_value == unbounded.max_value);
  CHECK(capped.witness.encoding() == unbounded.witness.encoding());
  CHECK(effective_threads() >= 1);
}

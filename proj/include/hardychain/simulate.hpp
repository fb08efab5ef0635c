#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hardychain/behavior.hpp"

namespace hardychain {

/// Pinned RNG scheme: one std::mt19937_64 stream per setting pair, seeded
/// with splitmix64(seed + GOLDEN_GAMMA * (pair_index + 1)); each draw maps
/// the top 53 bits to a uniform in [0,1). Bit-reproducible across runs and
/// platforms for a given seed.
inline constexpr char kRngScheme[] = "mt19937_64+splitmix64-pair-streams/1";

/// Outcome counts of a simulated run, one block of four counts per setting
/// pair, in the same layout as a Behavior table.
struct CountsTable {
  Scenario scenario{1};
  std::uint64_t shots_per_pair = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(int k, int kp, int out) const {
    return counts[scenario.index(k, kp, out)];
  }
};

/// Draws shots_per_pair outcomes per setting pair from the behavior's
/// four-outcome distributions. Per-pair streams are independent, so the
/// parallel and serial samplers produce identical tables.
CountsTable sample_counts(const Behavior& b, std::uint64_t shots_per_pair,
                          std::uint64_t seed);

/// Serial reference sampler; identical output to sample_counts.
CountsTable sample_counts_serial(const Behavior& b, std::uint64_t shots_per_pair,
                                 std::uint64_t seed);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Reported when a standard error is exactly zero (deterministic blocks,
/// e.g. the extremal box): the violation is infinitely many sigmas.
inline constexpr double kSigmasSentinel = std::numeric_limits<double>::max();

struct EstimateReport {
  Behavior behavior_hat;          // empirical frequencies
  Estimate p_k_hat;               // Hardy fraction
  Estimate chsh_hat;              // chained CHSH sum
  Estimate ch_plus_hat;           // all-plus chained CH sum
  // (chsh_hat - 2K) / std_error; +-kSigmasSentinel when std_error is 0.
  double violation_sigmas = 0.0;
  // Per-constraint estimates of the 2K+1 Hardy zeros; how small they must
  // be for a given inference is the caller's call.
  std::vector<std::pair<std::string, Estimate>> zero_terms;
};

/// Plugs empirical frequencies into the behavior operations. Block
/// probability errors are sqrt(p(1-p)/n); correlator errors use the exact
/// multinomial delta-method variance (1 - E^2)/n; sums propagate in
/// quadrature across blocks (blocks are independent). Every term of the CH
/// sum lives in a distinct block, so its quadrature propagation is exact.
EstimateReport estimate_report(const CountsTable& c);

}  // namespace hardychain

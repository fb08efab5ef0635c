#pragma once

#include <cstdint>
#include <vector>

#include "hardychain/behavior.hpp"

namespace hardychain {

/// Local deterministic strategy: bit k of a_bits (b_bits) is the outcome of
/// A_k (B_k), set bit meaning +1. K+1 significant bits per side.
struct DeterministicStrategy {
  int k_param = 1;
  std::uint32_t a_bits = 0;
  std::uint32_t b_bits = 0;

  int a_outcome(int k) const { return (a_bits >> k) & 1u ? +1 : -1; }
  int b_outcome(int k) const { return (b_bits >> k) & 1u ? +1 : -1; }
  std::uint64_t encoding() const {
    return (static_cast<std::uint64_t>(a_bits) << (k_param + 1)) | b_bits;
  }
};

/// The deterministic product behavior induced by a strategy.
Behavior deterministic_behavior(const DeterministicStrategy& s);

/// Chained CHSH value of a strategy, evaluated directly on the +-1 outcome
/// assignments.
double chsh_of_strategy(const DeterministicStrategy& s);

/// Tsirelson bound 2(K+1) cos(pi / (2(K+1))) of the chained CHSH sum.
double tsirelson_bound(int k_param);

/// Quantum upper limit on the Hardy fraction: (tsirelson_bound(K) - 2K) / 4.
double hardy_upper_limit(int k_param);

struct LrMaxResult {
  double max_value = 0.0;
  DeterministicStrategy witness;
};

inline constexpr int kLrEnumerationBudget = 12;

/// Exhaustive maximum of the chained CHSH sum over all 2^{2(K+1)}
/// deterministic strategies (equals 2K). Ties broken by smallest strategy
/// encoding. OpenMP-parallel over A-side assignments; see
/// lr_max_chsh_serial for the reference implementation.
LrMaxResult lr_max_chsh(int k_param);

/// Serial reference enumeration; identical result to lr_max_chsh.
LrMaxResult lr_max_chsh_serial(int k_param);

/// The extremal non-signaling box: 1/2 on equal outcomes everywhere except
/// the (0,0) pair, where the mass sits on unequal outcomes. Satisfies every
/// Hardy zero constraint with Hardy fraction 0.5 and reaches the algebraic
/// CHSH bound 2K+2.
Behavior extremal_ns_box(int k_param);

struct HardyMaxResult {
  double x_star = 0.0;
  double p_max = 0.0;
};

/// Maximizes the quantum Hardy fraction over x in [0,1] by golden-section
/// search (the fraction is unimodal there), to absolute x-tolerance 1e-10.
HardyMaxResult maximize_hardy_fraction(int k_param);

/// One row of the bound table.
struct BoundsRecord {
  int k_param = 0;
  double lr_bound = 0.0;    // 2K
  double tsirelson = 0.0;
  double algebraic = 0.0;   // 2K+2
  double l_k = 0.0;
  double p_max_qm = 0.0;
  double x_star = 0.0;
};

inline constexpr int kBoundsDatasetMaxK = 10000;

/// Bound curves for K = 1..k_max, parallel over K. Output is ordered by K
/// regardless of evaluation order.
std::vector<BoundsRecord> bounds_dataset(int k_max);

/// Serial reference for bounds_dataset; identical records.
std::vector<BoundsRecord> bounds_dataset_serial(int k_max);

inline constexpr int kMembershipDefaultBudget = 5;

/// True iff b is a convex combination of deterministic-strategy behaviors,
/// decided by linear feasibility over all 2^{2(K+1)} vertices at tolerance
/// 1e-9. Behaviors with chsh_sum above 2K + 1e-9 are rejected outright
/// (every local behavior obeys the 2K bound exactly), which keeps the
/// decision sound at the tolerance boundary.
bool local_membership(const Behavior& b, int budget_k = kMembershipDefaultBudget);

}  // namespace hardychain

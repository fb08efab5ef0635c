#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hardychain/scenario.hpp"

namespace hardychain {

// Construction tolerances (format errors); analysis tolerances are the
// caller-overridable defaults below (physics errors).
inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kNegativeClampBand = 1e-15;
inline constexpr double kDefaultAnalysisTol = 1e-9;

/// Full joint-probability table P(A_k = i, B_k' = j) over all setting pairs
/// of a ladder scenario. Immutable once constructed; all entries validated.
class Behavior {
 public:
  const Scenario& scenario() const { return scenario_; }
  int k() const { return scenario_.k(); }

  double at(int k, int k_prime, int out) const {
    return table_[scenario_.index(k, k_prime, out)];
  }
  double at_flat(int idx) const { return table_[idx]; }
  std::span<const double> table() const { return table_; }

  friend Behavior behavior_from_table(int k_param, std::span<const double> entries);

 private:
  Behavior(Scenario s, std::vector<double> t) : scenario_(s), table_(std::move(t)) {}

  Scenario scenario_;
  std::vector<double> table_;
};

/// Validates and wraps a flat table. Entry order is settings row-major in
/// (k, k'), outcomes (++, +-, -+, --) inside each block. Entries in
/// [-1e-15, 0) are clamped to 0; each block must sum to 1 within 1e-12.
Behavior behavior_from_table(int k_param, std::span<const double> entries);

/// Correlator E(A_k, B_k') = p^{++} + p^{--} - p^{+-} - p^{-+}.
double correlation(const Behavior& b, int k, int k_prime);

/// Chained CHSH sum: sum_{k=1..K} E(A_k,B_{k-1}) + sum_{k=1..K} E(A_{k-1},B_k)
/// + E(A_K,B_K) - E(A_0,B_0). Local-realistic bound 2K, algebraic bound 2K+2.
double chsh_sum(const Behavior& b);

struct ChValues {
  double plus;   // P_KK^{++} - P_00^{++} - sum_k [P_{k,k-1}^{+-} + P_{k-1,k}^{-+}]
  double minus;  // P_KK^{--} - P_00^{--} - sum_k [P_{k,k-1}^{-+} + P_{k-1,k}^{+-}]
};

/// Both chained CH expressions (all-plus and all-minus outcome roles).
ChValues ch_values(const Behavior& b);

/// One side of a marginal equality: the marginal of `party`'s setting
/// `setting` with outcome `outcome` (+1/-1), evaluated under two remote
/// settings that non-signaling requires to agree.
struct NsConstraintId {
  char party = 'A';
  int setting = 0;
  int outcome = +1;
  int remote_lo = 0;
  int remote_hi = 0;

  std::string to_string() const;
};

struct NsReport {
  double max_residual = 0.0;
  NsConstraintId worst_constraint;
};

/// Largest absolute difference among all marginal-equality pairs, over both
/// parties, all settings, all outcomes, and all pairs of remote settings.
/// Zero means the behavior is exactly non-signaling.
NsReport ns_residual(const Behavior& b);

struct HardyReport {
  double p_k = 0.0;                  // P(A_K=+1, B_K=+1), the Hardy fraction
  double max_zero_violation = 0.0;   // largest of the 2K+1 constrained probabilities
  std::vector<std::pair<std::string, double>> zero_terms;
};

/// Evaluates the Hardy fraction and the 2K+1 zero constraints:
/// P(A_0=+1,B_0=+1), P(A_k=+1,B_{k-1}=-1) and P(A_{k-1}=-1,B_k=+1) for k=1..K.
HardyReport hardy_report(const Behavior& b);

struct RelationResiduals {
  // |CHSH_K - 2K - 4*CH_K^+|; vanishes for every non-signaling behavior.
  double chsh_ch = 0.0;
  // |lhs - rhs| of the probability balance
  // P_KK^{--} = P_KK^{++} + P_00^{--} + sum_k P_{k,k-1}^{-+} + sum_k P_{k-1,k}^{+-},
  // which non-signaling enforces whenever the Hardy zero constraints hold.
  double hardy_balance = 0.0;
};

/// Residuals of the two chained relations. hardy_balance is reported
/// unconditionally; interpret it jointly with hardy_report.
///
/// For a behavior with ns_residual <= eps and max_zero_violation <= eps,
/// |chsh_sum - (2K + 4*p_k)| <= (12K+8)*eps (kChshHardyBoundSlope below).
RelationResiduals relation_residuals(const Behavior& b);

/// Slope C(K) = 12K+8 of the perturbation bound documented above.
inline double chsh_hardy_bound_slope(int k_param) { return 12.0 * k_param + 8.0; }

}  // namespace hardychain

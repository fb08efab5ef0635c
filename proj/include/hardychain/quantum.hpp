#pragma once

#include <array>
#include <vector>

#include "hardychain/behavior.hpp"

namespace hardychain {

/// Two-qubit pure state with real Schmidt coefficients
/// (x |++> - |-->)/sqrt(1+x^2); x=0 is a product state, x=1 maximally
/// entangled.
class SchmidtState {
 public:
  explicit SchmidtState(double x);

  double x() const { return x_; }
  double amp_plus_plus() const { return app_; }
  double amp_minus_minus() const { return amm_; }

  /// <a (x) b | state> for real single-qubit vectors a, b in the
  /// {|+>, |->} plane.
  double amplitude(const std::array<double, 2>& a,
                   const std::array<double, 2>& b) const {
    return app_ * a[0] * b[0] + amm_ * a[1] * b[1];
  }

 private:
  double x_;
  double app_;   //  x / sqrt(1+x^2)
  double amm_;   // -1 / sqrt(1+x^2)
};

/// Measurement-direction angles (radians) realizing the ladder zero
/// constraints on the Schmidt state. Symmetric: theta_a == theta_b with
/// tan(theta[0]) = sqrt(x) and tan(theta[k]) = -x * tan(theta[k-1]).
struct LadderAngles {
  std::vector<double> theta_a;
  std::vector<double> theta_b;
};

/// Angles for 0 < x < 1 and K >= 1. The induced Born-rule behavior
/// satisfies all 2K+1 ladder zero constraints within 1e-12.
LadderAngles ladder_angles(double x, int k_param);

/// Full Born-rule behavior for the Schmidt state with ladder observables.
/// Each measurement's +1 eigenvector is (cos t, sin t) in the {|+>,|->}
/// plane and the -1 eigenvector (-sin t, cos t); entries are squared inner
/// products. Non-signaling residual is at rounding level (<= 1e-12).
Behavior born_behavior(double x, int k_param);

/// The closed-form joint probabilities of the ladder construction.
struct ClosedFormProbs {
  double p00_mm = 0.0;       // P(A_0=-1, B_0=-1) = (1-x)^2 / (1+x^2)
  double pKK_mm = 0.0;       // P(A_K=-1, B_K=-1)
  double pKK_pp = 0.0;       // P(A_K=+1, B_K=+1) = hardy_fraction_qm(x, K)
  std::vector<double> zig;   // zig[k-1] = P(A_k=-1,B_{k-1}=+1) = P(A_{k-1}=+1,B_k=-1)
};

/// Evaluates the closed forms for 0 <= x <= 1 (boundaries by the formulas
/// directly; every zigzag term carries a factor x^{2k-1}, so x=0 gives 0).
ClosedFormProbs closed_form_probs(double x, int k_param);

/// Quantum Hardy fraction x^2/(1+x^2) * ((1-x^{2K})/(1+x^{2K+1}))^2 for
/// 0 <= x <= 1; value in [0, 0.5).
double hardy_fraction_qm(double x, int k_param);

/// Absolute difference between the two sides of the summation identity
///   sum_{k=1..K} x^{2k} / ((1+x^{2k-1})(1+x^{2k+1}))
///     = (sum_{k=1..K} x^{2k}) / ((1+x)(1+x^{2K+1})),
/// valid for any real x away from the denominator poles.
double ladder_identity_residual(double x, int k_param);

/// x^n for n >= 0 by binary exponentiation (multiplications only, no
/// exp/log), so closed-form cross-checks hold at 1e-12 tolerances.
double int_pow(double x, long long n);

}  // namespace hardychain

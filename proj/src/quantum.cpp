#include "hardychain/quantum.hpp"

#include <array>
#include <cmath>

namespace hardychain {

double int_pow(double x, long long n) {
  double result = 1.0;
  double base = x;
  for (long long e = n; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

SchmidtState::SchmidtState(double x) : x_(x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("SchmidtState: x must lie in [0,1], got " +
                      std::to_string(x));
  }
  const double norm = std::sqrt(1.0 + x * x);
  app_ = x / norm;
  amm_ = -1.0 / norm;
}

namespace {

void require_open_unit_interval(double x, int k_param, const char* who) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError(std::string(who) + ": x must lie in (0,1), got " +
                      std::to_string(x));
  }
  if (k_param < 1) {
    throw DomainError(std::string(who) + ": K must be >= 1");
  }
}

void require_closed_unit_interval(double x, int k_param, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(who) + ": x must lie in [0,1], got " +
                      std::to_string(x));
  }
  if (k_param < 1) {
    throw DomainError(std::string(who) + ": K must be >= 1");
  }
}

// tan(theta_k) = (-x)^k * sqrt(x), built by repeated multiplication so that
// consecutive tangents satisfy t_k = -x * t_{k-1} to the last ulp.
std::vector<double> ladder_tangents(double x, int k_param) {
  std::vector<double> t(k_param + 1);
  t[0] = std::sqrt(x);
  for (int k = 1; k <= k_param; ++k) t[k] = -x * t[k - 1];
  return t;
}

}  // namespace

LadderAngles ladder_angles(double x, int k_param) {
  require_open_unit_interval(x, k_param, "ladder_angles");
  std::vector<double> tangents = ladder_tangents(x, k_param);
  LadderAngles angles;
  angles.theta_a.reserve(k_param + 1);
  for (double t : tangents) angles.theta_a.push_back(std::atan(t));
  angles.theta_b = angles.theta_a;
  return angles;
}

Behavior born_behavior(double x, int k_param) {
  require_open_unit_interval(x, k_param, "born_behavior");
  const Scenario scenario(k_param);
  const SchmidtState state(x);
  std::vector<double> tangents = ladder_tangents(x, k_param);

  // Unit vectors from tangents directly; avoids atan/tan round-tripping.
  std::vector<std::array<double, 2>> plus_vec(k_param + 1);
  for (int k = 0; k <= k_param; ++k) {
    double c = 1.0 / std::sqrt(1.0 + tangents[k] * tangents[k]);
    plus_vec[k] = {c, tangents[k] * c};
  }
  auto eigvec = [&plus_vec](int setting, int neg) -> std::array<double, 2> {
    const auto& v = plus_vec[setting];
    if (neg == 0) return v;
    return {-v[1], v[0]};
  };

  std::vector<double> table(scenario.table_size());
  for (int k = 0; k <= k_param; ++k) {
    for (int kp = 0; kp <= k_param; ++kp) {
      for (int i_neg = 0; i_neg < 2; ++i_neg) {
        for (int j_neg = 0; j_neg < 2; ++j_neg) {
          auto a = eigvec(k, i_neg);
          auto b = eigvec(kp, j_neg);
          double amp = state.amplitude(a, b);
          table[scenario.index(k, kp, i_neg * 2 + j_neg)] = amp * amp;
        }
      }
    }
  }
  return behavior_from_table(k_param, table);
}

ClosedFormProbs closed_form_probs(double x, int k_param) {
  require_closed_unit_interval(x, k_param, "closed_form_probs");
  const double norm = 1.0 + x * x;
  ClosedFormProbs probs;
  probs.p00_mm = (1.0 - x) * (1.0 - x) / norm;

  const double x_2k1 = int_pow(x, 2LL * k_param + 1);
  const double num_mm = 1.0 - int_pow(x, 2LL * k_param + 2);
  probs.pKK_mm = num_mm * num_mm / (norm * (1.0 + x_2k1) * (1.0 + x_2k1));
  probs.pKK_pp = hardy_fraction_qm(x, k_param);

  // zig_k = (1-x^2)^2 x^{2k-1} / ((1+x^2)(1+x^{2k-1})(1+x^{2k+1}));
  // the x^{2k-1} factor makes the x=0 limit 0 without special-casing.
  const double one_minus_x2 = 1.0 - x * x;
  probs.zig.reserve(k_param);
  for (int k = 1; k <= k_param; ++k) {
    double x_lo = int_pow(x, 2LL * k - 1);
    double x_hi = int_pow(x, 2LL * k + 1);
    probs.zig.push_back(one_minus_x2 * one_minus_x2 * x_lo /
                        (norm * (1.0 + x_lo) * (1.0 + x_hi)));
  }
  return probs;
}

double hardy_fraction_qm(double x, int k_param) {
  require_closed_unit_interval(x, k_param, "hardy_fraction_qm");
  const double ratio =
      (1.0 - int_pow(x, 2LL * k_param)) / (1.0 + int_pow(x, 2LL * k_param + 1));
  return x * x / (1.0 + x * x) * ratio * ratio;
}

double ladder_identity_residual(double x, int k_param) {
  if (k_param < 1) throw DomainError("ladder_identity_residual: K must be >= 1");
  constexpr double kPoleTol = 1e-12;
  if (std::abs(1.0 + x) <= kPoleTol) {
    throw PoleError("ladder_identity_residual: 1+x vanishes");
  }
  const double x2 = x * x;

  double lhs = 0.0;
  double power_sum = 0.0;
  double x_odd = x;      // x^{2k-1}
  double x_even = 1.0;   // x^{2k}
  for (int k = 1; k <= k_param; ++k) {
    x_even *= x2;
    double lo = 1.0 + x_odd;
    x_odd *= x2;
    double hi = 1.0 + x_odd;
    if (std::abs(lo) <= kPoleTol || std::abs(hi) <= kPoleTol) {
      throw PoleError("ladder_identity_residual: denominator vanishes at k=" +
                      std::to_string(k));
    }
    lhs += x_even / (lo * hi);
    power_sum += x_even;
  }
  const double rhs = power_sum / ((1.0 + x) * (1.0 + x_odd));
  return std::abs(lhs - rhs);
}

}  // namespace hardychain

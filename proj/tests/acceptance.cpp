// Acceptance suite: end-to-end checks of the library and CLI against the
// frozen reference values, one PASS/FAIL line per criterion. Exit code is
// the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardychain/bounds.hpp"
#include "hardychain/cli.hpp"
#include "hardychain/proof.hpp"
#include "hardychain/quantum.hpp"
#include "hardychain/simulate.hpp"
#include "test_support.hpp"

using namespace hardychain;
namespace ts = hardychain::testsupport;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& name,
            const std::string& detail) {
  std::printf("%s  %2d  %-28s %s\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double elapsed_s(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void criterion_1_bound_table() {
  auto start = Clock::now();
  std::ostringstream out, err;
  int code = run_command({"bounds", "--k-max", "5", "--format", "csv",
                          "--precision", "9"},
                         out, err);
  double seconds = elapsed_s(start);

  const double expected[] = {0.207106, 0.299038, 0.347759, 0.377641, 0.397777};
  bool pass = code == 0;
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  double worst = 0.0;
  for (int row = 0; row < 5 && pass; ++row) {
    if (!std::getline(lines, line)) {
      pass = false;
      break;
    }
    std::istringstream fields(line);
    std::string field;
    for (int col = 0; col < 5; ++col) std::getline(fields, field, ',');
    double l_k = std::stod(field);
    worst = std::max(worst, std::abs(l_k - expected[row]));
  }
  pass = pass && worst <= 1e-6 && seconds < 1.0;
  char detail[96];
  std::snprintf(detail, sizeof detail, "max |L_K - ref| = %.2e, %.2f s", worst,
                seconds);
  report(1, pass, "bound table fidelity", detail);
}

void criterion_2_lr_enumeration() {
  auto start = Clock::now();
  bool pass = true;
  for (int k_param = 1; k_param <= 4; ++k_param) {
    pass = pass && lr_max_chsh(k_param).max_value == 2.0 * k_param;
  }
  double seconds = elapsed_s(start);
  pass = pass && seconds < 5.0;
  char detail[64];
  std::snprintf(detail, sizeof detail, "max = 2K for K=1..4, %.2f s", seconds);
  report(2, pass, "LR enumeration", detail);
}

void criterion_3_quantum_oracle() {
  double worst_cf = 0.0;
  double worst_zero = 0.0;
  for (int xi = 1; xi <= 9; ++xi) {
    double x = xi / 10.0;
    for (int k_param = 1; k_param <= 6; ++k_param) {
      Behavior b = born_behavior(x, k_param);
      ClosedFormProbs cf = closed_form_probs(x, k_param);
      worst_cf = std::max(worst_cf, std::abs(b.at(0, 0, kOutMM) - cf.p00_mm));
      worst_cf = std::max(worst_cf,
                          std::abs(b.at(k_param, k_param, kOutMM) - cf.pKK_mm));
      worst_cf = std::max(worst_cf,
                          std::abs(b.at(k_param, k_param, kOutPP) - cf.pKK_pp));
      for (int k = 1; k <= k_param; ++k) {
        worst_cf = std::max(worst_cf,
                            std::abs(b.at(k, k - 1, kOutMP) - cf.zig[k - 1]));
        worst_cf = std::max(worst_cf,
                            std::abs(b.at(k - 1, k, kOutPM) - cf.zig[k - 1]));
      }
      worst_zero = std::max(worst_zero, hardy_report(b).max_zero_violation);
    }
  }
  bool pass = worst_cf <= 1e-12 && worst_zero <= 1e-12;
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "max closed-form gap %.2e, max zero %.2e", worst_cf, worst_zero);
  report(3, pass, "quantum oracle equivalence", detail);
}

void criterion_4_central_relation() {
  double worst = 0.0;
  for (int xi = 1; xi <= 9; ++xi) {
    double x = xi / 10.0;
    for (int k_param = 1; k_param <= 6; ++k_param) {
      double gap = std::abs(chsh_sum(born_behavior(x, k_param)) -
                            2.0 * k_param - 4.0 * hardy_fraction_qm(x, k_param));
      worst = std::max(worst, gap);
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "max residual %.2e", worst);
  report(4, worst <= 1e-9, "chained CHSH-Hardy relation", detail);
}

void criterion_5_general_relation() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int k_param = 1; k_param <= 5; ++k_param) {
    for (int trial = 0; trial < 100; ++trial) {
      Behavior mix = ts::random_ns_mixture(k_param, rng);
      worst = std::max(worst, relation_residuals(mix).chsh_ch);
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "max residual %.2e over 500 mixtures",
                worst);
  report(5, worst <= 1e-9, "chained CHSH-CH relation", detail);
}

void criterion_6_extremal_box() {
  bool pass = true;
  for (int k_param = 1; k_param <= 6; ++k_param) {
    Behavior box = extremal_ns_box(k_param);
    HardyReport h = hardy_report(box);
    pass = pass && h.p_k == 0.5 && h.max_zero_violation == 0.0 &&
           chsh_sum(box) == 2.0 * k_param + 2.0 &&
           ns_residual(box).max_residual == 0.0;
  }
  report(6, pass, "extremal NS box", "exact values for K=1..6");
}

void criterion_7_hardy_maximization() {
  HardyMaxResult first = maximize_hardy_fraction(1);
  double grid_best = 0.0;
  const int n = 1000000;
  for (int i = 0; i <= n; ++i) {
    grid_best = std::max(grid_best, hardy_fraction_qm(double(i) / n, 1));
  }
  bool pass = std::abs(first.p_max - grid_best) <= 1e-6 &&
              std::abs(first.p_max - 0.090170) <= 1e-6;

  double prev_p = 0.0, prev_l = 0.0, l_100 = 0.0;
  for (int k_param = 1; k_param <= 100; ++k_param) {
    HardyMaxResult r = maximize_hardy_fraction(k_param);
    double l = hardy_upper_limit(k_param);
    pass = pass && r.p_max <= l && r.p_max >= prev_p && l >= prev_l &&
           r.p_max < 0.5 && l < 0.5;
    prev_p = r.p_max;
    prev_l = l;
    l_100 = l;
  }
  pass = pass && std::abs(l_100 - 0.49389) <= 1e-4;
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "p_max(1) = %.6f vs grid %.6f; L_100 = %.5f", first.p_max,
                grid_best, l_100);
  report(7, pass, "Hardy maximization", detail);
}

void criterion_8_proof_certificates() {
  auto start = Clock::now();
  bool pass = true;
  std::size_t terms_k1 = 0, terms_k2 = 0;
  try {
    for (int k_param = 1; k_param <= 10; ++k_param) {
      ProofCertificate cert = derive_balance_certificate(k_param);
      pass = pass && cert.verified && cert.residual.is_zero() &&
             balance_in_ns_span(k_param);
      if (k_param == 1) terms_k1 = cert.selected.size();
      if (k_param == 2) terms_k2 = cert.selected.size();
    }
  } catch (const Error&) {
    pass = false;
  }
  double seconds = elapsed_s(start);
  pass = pass && terms_k1 == 8 && terms_k2 == 12 && seconds < 10.0;
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "K=1..10 verified; %zu/%zu terms at K=1/2; %.2f s", terms_k1,
                terms_k2, seconds);
  report(8, pass, "proof certificates", detail);
}

void criterion_9_summation_identity() {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> unit(1e-9, 1.0 - 1e-9);
  double worst_rel = 0.0;

  auto relative = [](double x, int k_param) {
    double scale = 0.0;
    double x2 = x * x;
    double power = 1.0;
    for (int k = 1; k <= k_param; ++k) {
      power *= x2;
      scale += power;
    }
    scale /= std::abs((1.0 + x) * (1.0 + std::pow(x, 2 * k_param + 1)));
    if (scale == 0.0) return 0.0;
    return ladder_identity_residual(x, k_param) / scale;
  };

  for (int trial = 0; trial < 1000; ++trial) {
    int k_param = 1 + static_cast<int>(rng() % 10);
    worst_rel = std::max(worst_rel, relative(unit(rng), k_param));
  }
  for (double x : {1.5, 2.0}) {
    for (int k_param = 1; k_param <= 10; ++k_param) {
      worst_rel = std::max(worst_rel, relative(x, k_param));
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "max relative residual %.2e", worst_rel);
  report(9, worst_rel <= 1e-12, "summation identity", detail);
}

void criterion_10_monte_carlo() {
  Behavior b = born_behavior(0.5, 1);
  CountsTable c1 = sample_counts(b, 1000000, 31415);
  CountsTable c2 = sample_counts(b, 1000000, 31415);
  EstimateReport r = estimate_report(c1);
  double gap = std::abs(r.chsh_hat.value - 2.355556);
  bool pass = gap <= 5.0 * r.chsh_hat.std_error && c1.counts == c2.counts;
  char detail[96];
  std::snprintf(detail, sizeof detail, "|chsh_hat - 2.355556| = %.2e (se %.2e)",
                gap, r.chsh_hat.std_error);
  report(10, pass, "Monte Carlo sanity", detail);
}

void criterion_11_membership() {
  std::mt19937_64 rng(303);
  bool pass = true;
  for (int trial = 0; trial < 50; ++trial) {
    int k_param = 1 + trial % 3;
    pass = pass && local_membership(ts::random_local_mixture(k_param, rng));
  }
  for (int k_param = 1; k_param <= 3; ++k_param) {
    pass = pass && !local_membership(extremal_ns_box(k_param)) &&
           !local_membership(born_behavior(0.5, k_param));
  }
  report(11, pass, "membership soundness",
         "50 local mixtures in, box and Born behaviors out");
}

}  // namespace

int main() {
  auto start = Clock::now();
  criterion_1_bound_table();
  criterion_2_lr_enumeration();
  criterion_3_quantum_oracle();
  criterion_4_central_relation();
  criterion_5_general_relation();
  criterion_6_extremal_box();
  criterion_7_hardy_maximization();
  criterion_8_proof_certificates();
  criterion_9_summation_identity();
  criterion_10_monte_carlo();
  criterion_11_membership();
  std::printf("\n%d of 11 criteria passed in %.1f s\n", 11 - failures,
              elapsed_s(start));
  return failures;
}

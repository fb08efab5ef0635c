#include "hardychain/behavior.hpp"

#include <cmath>
#include <cstdio>

namespace hardychain {

Behavior behavior_from_table(int k_param, std::span<const double> entries) {
  Scenario scenario(k_param);
  if (static_cast<int>(entries.size()) != scenario.table_size()) {
    throw WrongLength("behavior_from_table: expected " +
                      std::to_string(scenario.table_size()) + " entries, got " +
                      std::to_string(entries.size()));
  }

  std::vector<double> table(entries.begin(), entries.end());
  for (double& p : table) {
    if (p < 0.0) {
      if (p < -kNegativeClampBand) {
        throw NegativeEntry("behavior_from_table: entry " + std::to_string(p) +
                            " below -1e-15");
      }
      p = 0.0;
    }
  }

  for (int k = 0; k <= k_param; ++k) {
    for (int kp = 0; kp <= k_param; ++kp) {
      double sum = 0.0;
      for (int out = 0; out < kOutcomesPerPair; ++out) {
        sum += table[scenario.index(k, kp, out)];
      }
      if (std::abs(sum - 1.0) > kNormalizationTol) {
        throw NotNormalized("behavior_from_table: block (" + std::to_string(k) +
                            "," + std::to_string(kp) + ") sums to " +
                            std::to_string(sum));
      }
    }
  }

  return Behavior(scenario, std::move(table));
}

double correlation(const Behavior& b, int k, int k_prime) {
  const Scenario& s = b.scenario();
  if (!s.setting_in_range(k) || !s.setting_in_range(k_prime)) {
    throw SettingOutOfRange("correlation: setting pair (" + std::to_string(k) +
                            "," + std::to_string(k_prime) + ") outside 0.." +
                            std::to_string(s.k()));
  }
  return b.at(k, k_prime, kOutPP) + b.at(k, k_prime, kOutMM) -
         b.at(k, k_prime, kOutPM) - b.at(k, k_prime, kOutMP);
}

double chsh_sum(const Behavior& b) {
  const int K = b.k();
  double sum = correlation(b, K, K) - correlation(b, 0, 0);
  for (int k = 1; k <= K; ++k) {
    sum += correlation(b, k, k - 1);
    sum += correlation(b, k - 1, k);
  }
  return sum;
}

ChValues ch_values(const Behavior& b) {
  const int K = b.k();
  ChValues v;
  v.plus = b.at(K, K, kOutPP) - b.at(0, 0, kOutPP);
  v.minus = b.at(K, K, kOutMM) - b.at(0, 0, kOutMM);
  for (int k = 1; k <= K; ++k) {
    v.plus -= b.at(k, k - 1, kOutPM) + b.at(k - 1, k, kOutMP);
    v.minus -= b.at(k, k - 1, kOutMP) + b.at(k - 1, k, kOutPM);
  }
  return v;
}

std::string NsConstraintId::to_string() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "P(%c%d=%c) under %c%d vs %c%d",
                party, setting, outcome > 0 ? '+' : '-',
                party == 'A' ? 'B' : 'A', remote_lo,
                party == 'A' ? 'B' : 'A', remote_hi);
  return buf;
}

namespace {

// Marginal of A_k (outcome row `i_neg`) under remote setting kp, or of B_k'
// (outcome column) under remote setting k.
double marginal_a(const Behavior& b, int k, int i_neg, int remote) {
  return b.at(k, remote, i_neg * 2 + 0) + b.at(k, remote, i_neg * 2 + 1);
}
double marginal_b(const Behavior& b, int kp, int j_neg, int remote) {
  return b.at(remote, kp, 0 * 2 + j_neg) + b.at(remote, kp, 1 * 2 + j_neg);
}

}  // namespace

NsReport ns_residual(const Behavior& b) {
  const int K = b.k();
  NsReport report;
  auto consider = [&report](double lhs, double rhs, char party, int setting,
                            int i_neg, int lo, int hi) {
    double res = std::abs(lhs - rhs);
    if (res > report.max_residual) {
      report.max_residual = res;
      report.worst_constraint = {party, setting, i_neg == 0 ? +1 : -1, lo, hi};
    }
  };

  for (int setting = 0; setting <= K; ++setting) {
    for (int neg = 0; neg < 2; ++neg) {
      for (int lo = 0; lo <= K; ++lo) {
        for (int hi = lo + 1; hi <= K; ++hi) {
          consider(marginal_a(b, setting, neg, lo), marginal_a(b, setting, neg, hi),
                   'A', setting, neg, lo, hi);
          consider(marginal_b(b, setting, neg, lo), marginal_b(b, setting, neg, hi),
                   'B', setting, neg, lo, hi);
        }
      }
    }
  }
  return report;
}

namespace {

std::string zero_term_name(int k, int kp, int out) {
  char buf[48];
  char i = (out < 2) ? '+' : '-';
  char j = (out % 2 == 0) ? '+' : '-';
  std::snprintf(buf, sizeof buf, "P(A%d=%c,B%d=%c)", k, i, kp, j);
  return buf;
}

}  // namespace

HardyReport hardy_report(const Behavior& b) {
  const int K = b.k();
  HardyReport report;
  report.p_k = b.at(K, K, kOutPP);

  auto add = [&b, &report](int k, int kp, int out) {
    double v = b.at(k, kp, out);
    report.zero_terms.emplace_back(zero_term_name(k, kp, out), v);
    if (v > report.max_zero_violation) report.max_zero_violation = v;
  };
  add(0, 0, kOutPP);
  for (int k = 1; k <= K; ++k) {
    add(k, k - 1, kOutPM);
    add(k - 1, k, kOutMP);
  }
  return report;
}

RelationResiduals relation_residuals(const Behavior& b) {
  const int K = b.k();
  RelationResiduals r;
  r.chsh_ch = std::abs(chsh_sum(b) - 2.0 * K - 4.0 * ch_values(b).plus);

  double rhs = b.at(K, K, kOutPP) + b.at(0, 0, kOutMM);
  for (int k = 1; k <= K; ++k) {
    rhs += b.at(k, k - 1, kOutMP) + b.at(k - 1, k, kOutPM);
  }
  r.hardy_balance = std::abs(b.at(K, K, kOutMM) - rhs);
  return r;
}

}  // namespace hardychain

#include "hardychain/bounds.hpp"

#include <omp.h>

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>

#include "hardychain/quantum.hpp"
#include "hardychain/threads.hpp"

namespace hardychain {

Behavior deterministic_behavior(const DeterministicStrategy& s) {
  const Scenario scenario(s.k_param);
  std::vector<double> table(scenario.table_size(), 0.0);
  for (int k = 0; k <= s.k_param; ++k) {
    for (int kp = 0; kp <= s.k_param; ++kp) {
      int i_neg = s.a_outcome(k) > 0 ? 0 : 1;
      int j_neg = s.b_outcome(kp) > 0 ? 0 : 1;
      table[scenario.index(k, kp, i_neg * 2 + j_neg)] = 1.0;
    }
  }
  return behavior_from_table(s.k_param, table);
}

double chsh_of_strategy(const DeterministicStrategy& s) {
  const int K = s.k_param;
  int sum = s.a_outcome(K) * s.b_outcome(K) - s.a_outcome(0) * s.b_outcome(0);
  for (int k = 1; k <= K; ++k) {
    sum += s.a_outcome(k) * s.b_outcome(k - 1);
    sum += s.a_outcome(k - 1) * s.b_outcome(k);
  }
  return sum;
}

double tsirelson_bound(int k_param) {
  if (k_param < 1) throw DomainError("tsirelson_bound: K must be >= 1");
  const double n = k_param + 1;
  return 2.0 * n * std::cos(std::numbers::pi / (2.0 * n));
}

double hardy_upper_limit(int k_param) {
  return (tsirelson_bound(k_param) - 2.0 * k_param) / 4.0;
}

namespace {

// CHSH of (a_bits, b_bits) on +-1 outcome arrays; integer-exact.
int chsh_of_bits(int K, const int* a, const int* b) {
  int sum = a[K] * b[K] - a[0] * b[0];
  for (int k = 1; k <= K; ++k) sum += a[k] * b[k - 1] + a[k - 1] * b[k];
  return sum;
}

void outcomes_from_bits(int K, std::uint32_t bits, int* out) {
  for (int k = 0; k <= K; ++k) out[k] = (bits >> k) & 1u ? +1 : -1;
}

struct EnumBest {
  int value = std::numeric_limits<int>::min();
  std::uint64_t encoding = ~0ull;

  void offer(int v, std::uint64_t enc) {
    if (v > value || (v == value && enc < encoding)) {
      value = v;
      encoding = enc;
    }
  }
};

LrMaxResult result_from_best(int k_param, const EnumBest& best) {
  const std::uint32_t mask = (1u << (k_param + 1)) - 1u;
  LrMaxResult r;
  r.max_value = best.value;
  r.witness.k_param = k_param;
  r.witness.a_bits = static_cast<std::uint32_t>(best.encoding >> (k_param + 1));
  r.witness.b_bits = static_cast<std::uint32_t>(best.encoding) & mask;
  return r;
}

void check_lr_budget(int k_param) {
  if (k_param < 1) throw DomainError("lr_max_chsh: K must be >= 1");
  if (k_param > kLrEnumerationBudget) {
    throw BudgetExceeded("lr_max_chsh: K=" + std::to_string(k_param) +
                         " exceeds enumeration budget " +
                         std::to_string(kLrEnumerationBudget));
  }
}

// Scans a_bits in [a_lo, a_hi) against every b assignment. Shared by the
// serial and the OpenMP path so both run the same inner loop.
EnumBest scan_a_range(int k_param, std::uint32_t a_lo, std::uint32_t a_hi) {
  const std::uint32_t side = 1u << (k_param + 1);
  int a[kLrEnumerationBudget + 1], b[kLrEnumerationBudget + 1];
  EnumBest best;
  for (std::uint32_t a_bits = a_lo; a_bits < a_hi; ++a_bits) {
    outcomes_from_bits(k_param, a_bits, a);
    for (std::uint32_t b_bits = 0; b_bits < side; ++b_bits) {
      outcomes_from_bits(k_param, b_bits, b);
      best.offer(chsh_of_bits(k_param, a, b),
                 (static_cast<std::uint64_t>(a_bits) << (k_param + 1)) | b_bits);
    }
  }
  return best;
}

}  // namespace

LrMaxResult lr_max_chsh_serial(int k_param) {
  check_lr_budget(k_param);
  const std::uint32_t side = 1u << (k_param + 1);
  return result_from_best(k_param, scan_a_range(k_param, 0, side));
}

LrMaxResult lr_max_chsh(int k_param) {
  check_lr_budget(k_param);
  const std::uint32_t side = 1u << (k_param + 1);
  const int chunks = std::min<std::uint32_t>(side, 8 * effective_threads());
  std::vector<EnumBest> partial(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
  for (int chunk = 0; chunk < chunks; ++chunk) {
    std::uint32_t lo = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(side) * chunk / chunks);
    std::uint32_t hi = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(side) * (chunk + 1) / chunks);
    partial[chunk] = scan_a_range(k_param, lo, hi);
  }
  EnumBest best;
  for (const EnumBest& p : partial) best.offer(p.value, p.encoding);
  return result_from_best(k_param, best);
}

Behavior extremal_ns_box(int k_param) {
  const Scenario scenario(k_param);
  std::vector<double> table(scenario.table_size(), 0.0);
  for (int k = 0; k <= k_param; ++k) {
    for (int kp = 0; kp <= k_param; ++kp) {
      bool origin = (k == 0 && kp == 0);
      table[scenario.index(k, kp, kOutPP)] = origin ? 0.0 : 0.5;
      table[scenario.index(k, kp, kOutMM)] = origin ? 0.0 : 0.5;
      table[scenario.index(k, kp, kOutPM)] = origin ? 0.5 : 0.0;
      table[scenario.index(k, kp, kOutMP)] = origin ? 0.5 : 0.0;
    }
  }
  return behavior_from_table(k_param, table);
}

namespace {

// Golden-section maximization on [lo, hi]; f unimodal there.
template <typename F>
double golden_section_argmax(F&& f, double lo, double hi, double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > x_tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace

HardyMaxResult maximize_hardy_fraction(int k_param) {
  if (k_param < 1) throw DomainError("maximize_hardy_fraction: K must be >= 1");
  auto f = [k_param](double x) { return hardy_fraction_qm(x, k_param); };
  HardyMaxResult r;
  r.x_star = golden_section_argmax(f, 0.0, 1.0, 1e-10);
  r.p_max = f(r.x_star);
  return r;
}

namespace {

BoundsRecord bounds_record(int k_param) {
  BoundsRecord rec;
  rec.k_param = k_param;
  rec.lr_bound = 2.0 * k_param;
  rec.tsirelson = tsirelson_bound(k_param);
  rec.algebraic = 2.0 * k_param + 2.0;
  rec.l_k = hardy_upper_limit(k_param);
  HardyMaxResult m = maximize_hardy_fraction(k_param);
  rec.p_max_qm = m.p_max;
  rec.x_star = m.x_star;
  return rec;
}

void check_dataset_range(int k_max) {
  if (k_max < 1 || k_max > kBoundsDatasetMaxK) {
    throw DomainError("bounds_dataset: k_max must lie in 1.." +
                      std::to_string(kBoundsDatasetMaxK));
  }
}

}  // namespace

std::vector<BoundsRecord> bounds_dataset_serial(int k_max) {
  check_dataset_range(k_max);
  std::vector<BoundsRecord> records(k_max);
  for (int k = 1; k <= k_max; ++k) records[k - 1] = bounds_record(k);
  return records;
}

std::vector<BoundsRecord> bounds_dataset(int k_max) {
  check_dataset_range(k_max);
  std::vector<BoundsRecord> records(k_max);
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_threads())
  for (int k = 1; k <= k_max; ++k) records[k - 1] = bounds_record(k);
  return records;
}

namespace {

// Phase-I simplex upper bound on the feasibility gap of
// { w >= 0 : V w = target, sum w = 1 }. Returns a value <= exit_tol as soon
// as the current artificial mass proves feasibility at that tolerance
// (minimization only improves it), else runs to optimality. Entering column
// by Dantzig's rule; the ratio test prefers large pivot elements among
// near-ties, which keeps the dense tableau from decaying on the heavily
// degenerate instances this polytope produces.
double phase_one_infeasibility(const std::vector<std::vector<double>>& columns,
                               const std::vector<double>& rhs, double exit_tol) {
  const int m = static_cast<int>(rhs.size());
  const int n = static_cast<int>(columns.size());
  const int cols = n + m + 1;  // structural + artificial + rhs
  constexpr double kReducedCostTol = 1e-9;
  constexpr double kPivotFloor = 1e-11;
  constexpr double kRatioTie = 1e-9;

  std::vector<std::vector<double>> t(m, std::vector<double>(cols, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = columns[j][i];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = rhs[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Objective row for min(sum of artificials), canonical w.r.t. the
  // artificial basis: negate the column sums of the structural part.
  std::vector<double> obj(cols, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) obj[j] -= t[i][j];
    obj[cols - 1] -= t[i][cols - 1];
  }

  const long iteration_cap = 2000L * m;
  for (long iteration = 0; iteration < iteration_cap; ++iteration) {
    double current = -obj[cols - 1];
    if (current <= exit_tol) return current;

    int entering = -1;
    double most_negative = -kReducedCostTol;
    for (int j = 0; j < n + m; ++j) {
      if (obj[j] < most_negative) {
        most_negative = obj[j];
        entering = j;
      }
    }
    if (entering < 0) break;

    // Min-ratio rows first, then the largest pivot among near-ties. Basic
    // values can drift a few ulps negative; clamp them so the drift cannot
    // poison the ratios.
    int leaving = -1;
    double min_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][entering] > kPivotFloor) {
        double ratio = std::max(t[i][cols - 1], 0.0) / t[i][entering];
        if (leaving < 0 || ratio < min_ratio) {
          min_ratio = ratio;
          leaving = i;
        }
      }
    }
    if (leaving < 0) break;  // unbounded cannot happen here; bail defensively
    for (int i = 0; i < m; ++i) {
      if (t[i][entering] > kPivotFloor &&
          std::max(t[i][cols - 1], 0.0) / t[i][entering] <=
              min_ratio + kRatioTie &&
          t[i][entering] > t[leaving][entering]) {
        leaving = i;
      }
    }

    double pivot = t[leaving][entering];
    for (double& v : t[leaving]) v /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leaving) continue;
      double factor = t[i][entering];
      if (factor == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leaving][j];
    }
    double factor = obj[entering];
    if (factor != 0.0) {
      for (int j = 0; j < cols; ++j) obj[j] -= factor * t[leaving][j];
    }
    basis[leaving] = entering;
  }
  return -obj[cols - 1];
}

}  // namespace

bool local_membership(const Behavior& b, int budget_k) {
  const int K = b.k();
  if (K > budget_k) {
    throw BudgetExceeded("local_membership: K=" + std::to_string(K) +
                         " exceeds budget " + std::to_string(budget_k));
  }
  constexpr double kDecisionTol = 1e-9;

  // Exact necessary condition first: local behaviors obey CHSH <= 2K.
  if (chsh_sum(b) > 2.0 * K + kDecisionTol) return false;

  // Vertex mixtures are exactly non-signaling, so a behavior further than
  // the decision tolerance from the NS subspace cannot be local.
  if (ns_residual(b).max_residual > kDecisionTol) return false;

  // On the NS subspace the table is an affine bijection of the moment
  // vector (1, <A_k>, <B_k'>, <A_k B_k'>): p^{ij} = (1 + i<A> + j<B> +
  // ij<AB>)/4. Solving the feasibility problem in moment coordinates keeps
  // the constraint rows linearly independent; the raw table rows are
  // heavily redundant and stall the simplex in degenerate pivots.
  const int settings = K + 1;
  const int m = 1 + 2 * settings + settings * settings;
  const std::uint32_t side = 1u << settings;
  const std::uint64_t vertex_count = static_cast<std::uint64_t>(side) * side;

  std::vector<std::vector<double>> columns(vertex_count);
  for (std::uint64_t v = 0; v < vertex_count; ++v) {
    DeterministicStrategy s{K, static_cast<std::uint32_t>(v >> settings),
                            static_cast<std::uint32_t>(v) & (side - 1)};
    std::vector<double> col(m);
    int row = 0;
    col[row++] = 1.0;  // convex-combination row
    for (int k = 0; k <= K; ++k) col[row++] = s.a_outcome(k);
    for (int kp = 0; kp <= K; ++kp) col[row++] = s.b_outcome(kp);
    for (int k = 0; k <= K; ++k) {
      for (int kp = 0; kp <= K; ++kp) {
        col[row++] = s.a_outcome(k) * s.b_outcome(kp);
      }
    }
    columns[v] = std::move(col);
  }

  std::vector<double> rhs(m);
  int row = 0;
  rhs[row++] = 1.0;
  for (int k = 0; k <= K; ++k) {
    rhs[row++] = b.at(k, 0, kOutPP) + b.at(k, 0, kOutPM) -
                 b.at(k, 0, kOutMP) - b.at(k, 0, kOutMM);
  }
  for (int kp = 0; kp <= K; ++kp) {
    rhs[row++] = b.at(0, kp, kOutPP) - b.at(0, kp, kOutPM) +
                 b.at(0, kp, kOutMP) - b.at(0, kp, kOutMM);
  }
  for (int k = 0; k <= K; ++k) {
    for (int kp = 0; kp <= K; ++kp) rhs[row++] = correlation(b, k, kp);
  }

  // Phase-I needs a nonnegative right-hand side.
  for (int i = 0; i < m; ++i) {
    if (rhs[i] < 0.0) {
      rhs[i] = -rhs[i];
      for (auto& col : columns) col[i] = -col[i];
    }
  }

  return phase_one_infeasibility(columns, rhs, kDecisionTol) <= kDecisionTol;
}

}  // namespace hardychain

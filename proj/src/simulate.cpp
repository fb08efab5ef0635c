#include "hardychain/simulate.hpp"

#include <cmath>
#include <random>

#include "hardychain/threads.hpp"

namespace hardychain {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t pair_stream_seed(std::uint64_t seed, int pair_index) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull *
                               (static_cast<std::uint64_t>(pair_index) + 1));
}

// Top 53 bits as a uniform double in [0,1); pinned mapping, no
// distribution-object variability across standard libraries.
double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void sample_pair(const Behavior& b, int k, int kp, std::uint64_t shots,
                 std::uint64_t seed, std::uint64_t* block) {
  const Scenario& s = b.scenario();
  const int pair_index = k * s.settings() + kp;
  std::mt19937_64 rng(pair_stream_seed(seed, pair_index));

  const double c0 = b.at(k, kp, 0);
  const double c1 = c0 + b.at(k, kp, 1);
  const double c2 = c1 + b.at(k, kp, 2);
  std::uint64_t n[4] = {0, 0, 0, 0};
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    double u = uniform53(rng);
    int out = u < c0 ? 0 : u < c1 ? 1 : u < c2 ? 2 : 3;
    ++n[out];
  }
  for (int out = 0; out < 4; ++out) block[out] = n[out];
}

CountsTable make_counts(const Behavior& b, std::uint64_t shots,
                        std::uint64_t seed) {
  if (shots == 0) throw ZeroShots("sample_counts: shots_per_pair must be >= 1");
  CountsTable c;
  c.scenario = b.scenario();
  c.shots_per_pair = shots;
  c.seed = seed;
  c.counts.assign(c.scenario.table_size(), 0);
  return c;
}

}  // namespace

CountsTable sample_counts_serial(const Behavior& b, std::uint64_t shots_per_pair,
                                 std::uint64_t seed) {
  CountsTable c = make_counts(b, shots_per_pair, seed);
  const int K = b.k();
  for (int k = 0; k <= K; ++k) {
    for (int kp = 0; kp <= K; ++kp) {
      sample_pair(b, k, kp, shots_per_pair, seed,
                  &c.counts[c.scenario.index(k, kp, 0)]);
    }
  }
  return c;
}

CountsTable sample_counts(const Behavior& b, std::uint64_t shots_per_pair,
                          std::uint64_t seed) {
  CountsTable c = make_counts(b, shots_per_pair, seed);
  const int settings = b.scenario().settings();
  const int pairs = settings * settings;
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
  for (int pair = 0; pair < pairs; ++pair) {
    int k = pair / settings;
    int kp = pair % settings;
    sample_pair(b, k, kp, shots_per_pair, seed,
                &c.counts[c.scenario.index(k, kp, 0)]);
  }
  return c;
}

EstimateReport estimate_report(const CountsTable& c) {
  const int K = c.scenario.k();
  const double n = static_cast<double>(c.shots_per_pair);

  std::vector<double> freq(c.counts.size());
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    freq[i] = static_cast<double>(c.counts[i]) / n;
  }
  Behavior hat = behavior_from_table(K, freq);

  auto prob_se = [n](double p) { return std::sqrt(p * (1.0 - p) / n); };
  auto corr_var = [n](double e) { return (1.0 - e * e) / n; };

  EstimateReport report{hat, {}, {}, {}, 0.0, {}};
  report.p_k_hat = {hat.at(K, K, kOutPP), prob_se(hat.at(K, K, kOutPP))};

  double chsh = chsh_sum(hat);
  double chsh_var = corr_var(correlation(hat, K, K)) + corr_var(correlation(hat, 0, 0));
  double ch_plus = ch_values(hat).plus;
  double ch_var = hat.at(K, K, kOutPP) * (1.0 - hat.at(K, K, kOutPP)) / n +
                  hat.at(0, 0, kOutPP) * (1.0 - hat.at(0, 0, kOutPP)) / n;
  for (int k = 1; k <= K; ++k) {
    chsh_var += corr_var(correlation(hat, k, k - 1));
    chsh_var += corr_var(correlation(hat, k - 1, k));
    ch_var += hat.at(k, k - 1, kOutPM) * (1.0 - hat.at(k, k - 1, kOutPM)) / n;
    ch_var += hat.at(k - 1, k, kOutMP) * (1.0 - hat.at(k - 1, k, kOutMP)) / n;
  }
  report.chsh_hat = {chsh, std::sqrt(chsh_var)};
  report.ch_plus_hat = {ch_plus, std::sqrt(ch_var)};

  double excess = chsh - 2.0 * K;
  if (report.chsh_hat.std_error == 0.0) {
    report.violation_sigmas =
        excess == 0.0 ? 0.0 : (excess > 0.0 ? kSigmasSentinel : -kSigmasSentinel);
  } else {
    report.violation_sigmas = excess / report.chsh_hat.std_error;
  }

  for (const auto& [name, value] : hardy_report(hat).zero_terms) {
    report.zero_terms.emplace_back(name, Estimate{value, prob_se(value)});
  }
  return report;
}

}  // namespace hardychain

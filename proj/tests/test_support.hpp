#pragma once

#include <random>
#include <vector>

#include "hardychain/behavior.hpp"
#include "hardychain/bounds.hpp"

namespace hardychain::testsupport {

inline Behavior uniform_behavior(int k_param) {
  Scenario s(k_param);
  std::vector<double> table(s.table_size(), 0.25);
  return behavior_from_table(k_param, table);
}

inline DeterministicStrategy random_strategy(int k_param, std::mt19937_64& rng) {
  const std::uint32_t mask = (1u << (k_param + 1)) - 1u;
  return {k_param, static_cast<std::uint32_t>(rng()) & mask,
          static_cast<std::uint32_t>(rng()) & mask};
}

// Convex mixture of deterministic behaviors, the extremal box, and the
// uniform behavior with uniformly sampled (then normalized) weights.
// Convexity keeps the result exactly non-signaling.
inline Behavior random_ns_mixture(int k_param, std::mt19937_64& rng,
                                  int n_deterministic = 4) {
  std::vector<Behavior> parts;
  for (int i = 0; i < n_deterministic; ++i) {
    parts.push_back(deterministic_behavior(random_strategy(k_param, rng)));
  }
  parts.push_back(extremal_ns_box(k_param));
  parts.push_back(uniform_behavior(k_param));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(parts.size());
  double total = 0.0;
  for (double& w : weights) {
    w = unit(rng);
    total += w;
  }

  Scenario s(k_param);
  std::vector<double> table(s.table_size(), 0.0);
  for (std::size_t part = 0; part < parts.size(); ++part) {
    double w = weights[part] / total;
    for (int idx = 0; idx < s.table_size(); ++idx) {
      table[idx] += w * parts[part].table()[idx];
    }
  }
  return behavior_from_table(k_param, table);
}

// Mixture of deterministic behaviors only: always local.
inline Behavior random_local_mixture(int k_param, std::mt19937_64& rng,
                                     int n_parts = 6) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(n_parts);
  double total = 0.0;
  for (double& w : weights) {
    w = unit(rng);
    total += w;
  }
  Scenario s(k_param);
  std::vector<double> table(s.table_size(), 0.0);
  for (int part = 0; part < n_parts; ++part) {
    Behavior det = deterministic_behavior(random_strategy(k_param, rng));
    for (int idx = 0; idx < s.table_size(); ++idx) {
      table[idx] += weights[part] / total * det.table()[idx];
    }
  }
  return behavior_from_table(k_param, table);
}

// Arbitrary normalized table, not non-signaling in general.
inline Behavior random_behavior(int k_param, std::mt19937_64& rng) {
  Scenario s(k_param);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> table(s.table_size());
  for (int pair = 0; pair < s.pairs(); ++pair) {
    double block[4];
    double sum = 0.0;
    for (double& v : block) {
      v = unit(rng);
      sum += v;
    }
    for (int out = 0; out < 4; ++out) table[pair * 4 + out] = block[out] / sum;
  }
  return behavior_from_table(k_param, table);
}

}  // namespace hardychain::testsupport

#pragma once

#include "hardychain/errors.hpp"

namespace hardychain {

// Joint outcome index inside a setting-pair block, wire order (++, +-, -+, --).
inline constexpr int kOutPP = 0;
inline constexpr int kOutPM = 1;
inline constexpr int kOutMP = 2;
inline constexpr int kOutMM = 3;
inline constexpr int kOutcomesPerPair = 4;

/// A bipartite ladder scenario: each party measures one of K+1 dichotomic
/// observables, indexed 0..K.
class Scenario {
 public:
  explicit Scenario(int k_param) : k_param_(k_param) {
    if (k_param < 1) {
      throw DomainError("Scenario: K must be >= 1, got " + std::to_string(k_param));
    }
  }

  int k() const { return k_param_; }
  int settings() const { return k_param_ + 1; }
  int pairs() const { return settings() * settings(); }
  int table_size() const { return kOutcomesPerPair * pairs(); }

  /// Flat index of entry P(A_k = i, B_k' = j); `out` is one of kOutPP..kOutMM.
  int index(int k, int k_prime, int out) const {
    return (k * settings() + k_prime) * kOutcomesPerPair + out;
  }

  bool setting_in_range(int s) const { return s >= 0 && s <= k_param_; }

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  int k_param_;
};

}  // namespace hardychain

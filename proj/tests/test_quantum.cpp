#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "hardychain/quantum.hpp"
#include "test_support.hpp"

using namespace hardychain;

TEST_CASE("ladder_angles follow the tangent recursion") {
  LadderAngles a = ladder_angles(0.25, 1);
  CHECK(a.theta_a.size() == 2);
  CHECK(a.theta_a[0] == doctest::Approx(0.4636476090008061).epsilon(1e-12));
  CHECK(a.theta_a[1] == doctest::Approx(-0.12435499454676144).epsilon(1e-12));
  CHECK(a.theta_a == a.theta_b);

  for (double x : {0.1, 0.4, 0.8}) {
    LadderAngles angles = ladder_angles(x, 6);
    CHECK(std::abs(std::tan(angles.theta_a[0])) ==
          doctest::Approx(std::sqrt(x)).epsilon(1e-12));
    CHECK(angles.theta_a[0] > 0.0);
    for (int k = 1; k <= 6; ++k) {
      CHECK(std::tan(angles.theta_a[k]) ==
            doctest::Approx(-x * std::tan(angles.theta_a[k - 1])).epsilon(1e-11));
      CHECK(std::abs(angles.theta_a[k]) < std::abs(angles.theta_a[k - 1]));
    }
  }

  CHECK_THROWS_AS(ladder_angles(0.0, 1), DomainError);
  CHECK_THROWS_AS(ladder_angles(1.0, 1), DomainError);
  CHECK_THROWS_AS(ladder_angles(-0.2, 1), DomainError);
  CHECK_THROWS_AS(ladder_angles(0.5, 0), DomainError);
}

TEST_CASE("a behavior rebuilt from the angles reproduces the Hardy fraction") {
  const double x = 0.5;
  const int k_param = 2;
  LadderAngles angles = ladder_angles(x, k_param);
  SchmidtState state(x);
  Scenario s(k_param);
  std::vector<double> table(s.table_size());
  for (int k = 0; k <= k_param; ++k) {
    for (int kp = 0; kp <= k_param; ++kp) {
      for (int i_neg = 0; i_neg < 2; ++i_neg) {
        for (int j_neg = 0; j_neg < 2; ++j_neg) {
          double ca = std::cos(angles.theta_a[k]), sa = std::sin(angles.theta_a[k]);
          double cb = std::cos(angles.theta_b[kp]), sb = std::sin(angles.theta_b[kp]);
          std::array<double, 2> a = i_neg == 0 ? std::array{ca, sa}
                                               : std::array{-sa, ca};
          std::array<double, 2> b = j_neg == 0 ? std::array{cb, sb}
                                               : std::array{-sb, cb};
          double amp = state.amplitude(a, b);
          table[s.index(k, kp, i_neg * 2 + j_neg)] = amp * amp;
        }
      }
    }
  }
  Behavior from_angles = behavior_from_table(k_param, table);
  CHECK(std::abs(hardy_report(from_angles).p_k - hardy_fraction_qm(x, k_param)) <=
        1e-12);
  CHECK(hardy_report(from_angles).max_zero_violation <= 1e-12);
}

TEST_CASE("SchmidtState validates and normalizes") {
  SchmidtState s(0.5);
  double norm = s.amp_plus_plus() * s.amp_plus_plus() +
                s.amp_minus_minus() * s.amp_minus_minus();
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(SchmidtState(-0.1), DomainError);
  CHECK_THROWS_AS(SchmidtState(1.2), DomainError);
}

TEST_CASE("closed-form fields are probabilities") {
  for (double x = 0.0; x <= 1.0; x += 0.125) {
    for (int k_param : {1, 4, 9}) {
      ClosedFormProbs cf = closed_form_probs(x, k_param);
      for (double v : {cf.p00_mm, cf.pKK_mm, cf.pKK_pp}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
      for (double z : cf.zig) {
        CHECK(z >= 0.0);
        CHECK(z <= 1.0);
      }
      CHECK(cf.pKK_pp == hardy_fraction_qm(x, k_param));
    }
  }
}

TEST_CASE("born_behavior satisfies every ladder zero constraint") {
  for (double x = 0.05; x < 1.0; x += 0.1) {
    for (int k_param = 1; k_param <= 8; ++k_param) {
      Behavior b = born_behavior(x, k_param);
      CHECK(hardy_report(b).max_zero_violation <= 1e-12);
      CHECK(ns_residual(b).max_residual <= 1e-12);
    }
  }
}

TEST_CASE("born_behavior matches the closed forms at the ladder pairs") {
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int k_param = 1; k_param <= 6; ++k_param) {
      Behavior b = born_behavior(x, k_param);
      ClosedFormProbs cf = closed_form_probs(x, k_param);
      CHECK(b.at(0, 0, kOutMM) == doctest::Approx(cf.p00_mm).epsilon(1e-12));
      CHECK(b.at(k_param, k_param, kOutMM) ==
            doctest::Approx(cf.pKK_mm).epsilon(1e-12));
      CHECK(b.at(k_param, k_param, kOutPP) ==
            doctest::Approx(cf.pKK_pp).epsilon(1e-12));
      for (int k = 1; k <= k_param; ++k) {
        CHECK(b.at(k, k - 1, kOutMP) ==
              doctest::Approx(cf.zig[k - 1]).epsilon(1e-12));
        CHECK(b.at(k - 1, k, kOutPM) ==
              doctest::Approx(cf.zig[k - 1]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("closed_form_probs boundary values and frozen point") {
  ClosedFormProbs at0 = closed_form_probs(0.0, 3);
  CHECK(at0.p00_mm == 1.0);
  CHECK(at0.pKK_pp == 0.0);
  for (double z : at0.zig) CHECK(z == 0.0);

  ClosedFormProbs at1 = closed_form_probs(1.0, 4);
  CHECK(at1.pKK_pp == 0.0);

  // x=1/2, K=1: p00_mm = (1/4)/(5/4) = 1/5; pKK_pp = 4/45; the zigzag term
  // is 2/15, cross-checked against the Born table and the balance relation
  // P_11^{--} = 5/9 = 4/45 + 1/5 + 2*(2/15).
  ClosedFormProbs half = closed_form_probs(0.5, 1);
  CHECK(half.p00_mm == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(half.pKK_pp == doctest::Approx(4.0 / 45.0).epsilon(1e-15));
  CHECK(half.pKK_mm == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
  REQUIRE(half.zig.size() == 1);
  CHECK(half.zig[0] == doctest::Approx(2.0 / 15.0).epsilon(1e-15));
  CHECK(half.pKK_mm ==
        doctest::Approx(half.pKK_pp + half.p00_mm + 2.0 * half.zig[0])
            .epsilon(1e-15));

  CHECK_THROWS_AS(closed_form_probs(-0.1, 1), DomainError);
  CHECK_THROWS_AS(closed_form_probs(1.1, 1), DomainError);
}

TEST_CASE("hardy_fraction_qm values and monotonicity in K") {
  CHECK(hardy_fraction_qm(0.0, 3) == 0.0);
  CHECK(hardy_fraction_qm(1.0, 3) == 0.0);
  CHECK(hardy_fraction_qm(0.5, 1) == doctest::Approx(4.0 / 45.0).epsilon(1e-15));

  for (double x : {0.2, 0.5, 0.8, 0.95}) {
    double prev = hardy_fraction_qm(x, 1);
    CHECK(prev >= 0.0);
    for (int k_param = 2; k_param <= 12; ++k_param) {
      double next = hardy_fraction_qm(x, k_param);
      CHECK(next >= prev);
      CHECK(next < 0.5);
      prev = next;
    }
  }
}

TEST_CASE("chained relation holds on the Born behavior") {
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int k_param = 1; k_param <= 6; ++k_param) {
      double gap = std::abs(chsh_sum(born_behavior(x, k_param)) -
                            2.0 * k_param - 4.0 * hardy_fraction_qm(x, k_param));
      CHECK(gap <= 1e-9);
    }
  }
}

TEST_CASE("balance relation holds on the closed forms") {
  for (double x : {0.15, 0.45, 0.85}) {
    for (int k_param = 1; k_param <= 8; ++k_param) {
      ClosedFormProbs cf = closed_form_probs(x, k_param);
      double zig_sum = 0.0;
      for (double z : cf.zig) zig_sum += z;
      CHECK(cf.pKK_mm ==
            doctest::Approx(cf.pKK_pp + cf.p00_mm + 2.0 * zig_sum).epsilon(1e-9));
    }
  }
}

TEST_CASE("ladder summation identity") {
  CHECK(ladder_identity_residual(0.3, 4) <= 1e-12);
  CHECK(ladder_identity_residual(0.0, 5) == 0.0);

  // Beyond [0,1]: check a relative bound at x=2, K=3.
  double lhs_scale = 0.0;
  {
    double x = 2.0;
    for (int k = 1; k <= 3; ++k) {
      lhs_scale += int_pow(x, 2 * k) /
                   ((1.0 + int_pow(x, 2 * k - 1)) * (1.0 + int_pow(x, 2 * k + 1)));
    }
  }
  CHECK(ladder_identity_residual(2.0, 3) <= 1e-9 * lhs_scale);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  for (int trial = 0; trial < 1000; ++trial) {
    double x = unit(rng);
    int k_param = 1 + static_cast<int>(rng() % 10);
    CHECK(ladder_identity_residual(x, k_param) <= 1e-12);
  }

  CHECK_THROWS_AS(ladder_identity_residual(-1.0, 3), PoleError);
  CHECK_THROWS_AS(ladder_identity_residual(0.5, 0), DomainError);
}

TEST_CASE("int_pow agrees with std::pow on exact cases") {
  CHECK(int_pow(2.0, 10) == 1024.0);
  CHECK(int_pow(0.5, 3) == 0.125);
  CHECK(int_pow(0.9, 0) == 1.0);
  CHECK(int_pow(0.0, 5) == 0.0);
}

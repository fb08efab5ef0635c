#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "hardychain/behavior.hpp"

namespace hardychain {

/// Exact rational scalar for certificate arithmetic (arbitrary-precision
/// integers; exactness, not speed, is the contract here).
using Rational = boost::multiprecision::cpp_rational;

/// A linear expression sum_i c_i * P_i + constant over the flat probability
/// basis of a scenario (index = Scenario::index). Exact coefficients.
class LinearExpr {
 public:
  void add_term(int index, const Rational& c);
  void add_constant(const Rational& c) { constant_ += c; }
  void add_scaled(const LinearExpr& other, const Rational& c);

  Rational coefficient(int index) const;
  const Rational& constant() const { return constant_; }
  const std::map<int, Rational>& terms() const { return coeffs_; }

  /// Drops the coefficients at the given basis indices (reduction modulo a
  /// set of variables constrained to zero).
  LinearExpr without_indices(const std::vector<int>& indices) const;

  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

  /// Floating evaluation against a behavior's table.
  double eval(const Behavior& b) const;

 private:
  void prune(int index);

  std::map<int, Rational> coeffs_;
  Rational constant_ = 0;
};

/// One elementary non-signaling equality, stored as lhs - rhs.
struct NsEquality {
  std::string id;
  LinearExpr expr;
};

/// All elementary non-signaling equalities of the scenario in adjacent-pair
/// form: for each party, each local setting, each outcome, the marginal
/// under remote setting m equals the marginal under m+1. Exactly 4(K+1)*K
/// expressions. Three-way marginal chains are canonicalized this way so
/// certificates have a unique basis.
std::vector<NsEquality> ns_system(int k_param);

/// Flat indices of the 2K+1 Hardy zero constraints: P(A_0=+1,B_0=+1),
/// P(A_k=+1,B_{k-1}=-1) and P(A_{k-1}=-1,B_k=+1) for k = 1..K.
std::vector<int> hardy_zero_set(int k_param);

/// lhs - rhs of the probability balance
/// P_KK^{--} - P_KK^{++} - P_00^{--} - sum_k P_{k,k-1}^{-+} - sum_k P_{k-1,k}^{+-}.
LinearExpr balance_expression(int k_param);

/// One selected marginal equality in the certificate. The expression is the
/// oriented marginal difference between two remote settings of one (party,
/// setting, outcome) family; reduced means modulo the Hardy zero set.
struct CertificateTerm {
  std::string equality;   // e.g. "A+:s1:m0->m2"; orientation is first-minus-second
  Rational multiplier;    // 1 for every term of this construction
  int subset = 0;         // 0: A-party marginal subset, 1: B-party subset
  LinearExpr expr;        // unreduced oriented expression
  LinearExpr reduced;     // expr modulo the zero set
};

struct ProofCertificate {
  int k_param = 0;
  std::vector<CertificateTerm> selected;  // 4(K+1) terms
  LinearExpr residual;                    // identically zero when verified
  bool verified = false;
};

inline constexpr int kCertificateBudget = 64;

/// Reconstructs the ladder proof as exact arithmetic: selects 4(K+1)
/// marginal equalities (two swap-symmetric subsets of 2K+2 each) whose sum,
/// reduced modulo the Hardy zero set, equals exactly twice the balance
/// expression. Verification is literal coefficient cancellation. A second,
/// independent path checks by exact Gaussian elimination that the balance
/// expression lies in the span of ns_system plus the zero-set coordinates;
/// both paths must succeed, else DerivationFailed.
ProofCertificate derive_balance_certificate(int k_param);

/// The generic-elimination path alone: true iff the balance expression is
/// in the exact linear span of the adjacent-pair equalities and the
/// zero-set coordinate vectors.
bool balance_in_ns_span(int k_param);

}  // namespace hardychain

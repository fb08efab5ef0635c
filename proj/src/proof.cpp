#include "hardychain/proof.hpp"

#include <algorithm>
#include <cstdio>

namespace hardychain {

void LinearExpr::add_term(int index, const Rational& c) {
  if (c == 0) return;
  coeffs_[index] += c;
  prune(index);
}

void LinearExpr::add_scaled(const LinearExpr& other, const Rational& c) {
  if (c == 0) return;
  for (const auto& [index, coeff] : other.coeffs_) {
    coeffs_[index] += c * coeff;
    prune(index);
  }
  constant_ += c * other.constant_;
}

Rational LinearExpr::coefficient(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LinearExpr LinearExpr::without_indices(const std::vector<int>& indices) const {
  LinearExpr result = *this;
  for (int index : indices) result.coeffs_.erase(index);
  return result;
}

double LinearExpr::eval(const Behavior& b) const {
  double sum = constant_.convert_to<double>();
  for (const auto& [index, coeff] : coeffs_) {
    sum += coeff.convert_to<double>() * b.at_flat(index);
  }
  return sum;
}

void LinearExpr::prune(int index) {
  auto it = coeffs_.find(index);
  if (it != coeffs_.end() && it->second == 0) coeffs_.erase(it);
}

namespace {

// Oriented marginal difference for one (party, outcome, setting) family:
// marginal under remote setting m_first minus marginal under m_second.
LinearExpr marginal_difference(const Scenario& s, char party, int neg,
                               int setting, int m_first, int m_second) {
  LinearExpr e;
  for (int remote_neg = 0; remote_neg < 2; ++remote_neg) {
    if (party == 'A') {
      e.add_term(s.index(setting, m_first, neg * 2 + remote_neg), 1);
      e.add_term(s.index(setting, m_second, neg * 2 + remote_neg), -1);
    } else {
      e.add_term(s.index(m_first, setting, remote_neg * 2 + neg), 1);
      e.add_term(s.index(m_second, setting, remote_neg * 2 + neg), -1);
    }
  }
  return e;
}

std::string equality_id(char party, int neg, int setting, int m_first,
                        int m_second) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%c%c:s%d:m%d->m%d", party, neg == 0 ? '+' : '-',
                setting, m_first, m_second);
  return buf;
}

void require_k(int k_param, const char* who) {
  if (k_param < 1) throw DomainError(std::string(who) + ": K must be >= 1");
}

}  // namespace

std::vector<NsEquality> ns_system(int k_param) {
  require_k(k_param, "ns_system");
  const Scenario s(k_param);
  std::vector<NsEquality> system;
  system.reserve(4 * (k_param + 1) * k_param);
  for (char party : {'A', 'B'}) {
    for (int neg = 0; neg < 2; ++neg) {
      for (int setting = 0; setting <= k_param; ++setting) {
        for (int m = 0; m < k_param; ++m) {
          system.push_back({equality_id(party, neg, setting, m, m + 1),
                            marginal_difference(s, party, neg, setting, m, m + 1)});
        }
      }
    }
  }
  return system;
}

std::vector<int> hardy_zero_set(int k_param) {
  require_k(k_param, "hardy_zero_set");
  const Scenario s(k_param);
  std::vector<int> zeros;
  zeros.reserve(2 * k_param + 1);
  zeros.push_back(s.index(0, 0, kOutPP));
  for (int k = 1; k <= k_param; ++k) {
    zeros.push_back(s.index(k, k - 1, kOutPM));
    zeros.push_back(s.index(k - 1, k, kOutMP));
  }
  return zeros;
}

LinearExpr balance_expression(int k_param) {
  require_k(k_param, "balance_expression");
  const Scenario s(k_param);
  LinearExpr e;
  e.add_term(s.index(k_param, k_param, kOutMM), 1);
  e.add_term(s.index(k_param, k_param, kOutPP), -1);
  e.add_term(s.index(0, 0, kOutMM), -1);
  for (int k = 1; k <= k_param; ++k) {
    e.add_term(s.index(k, k - 1, kOutMP), -1);
    e.add_term(s.index(k - 1, k, kOutPM), -1);
  }
  return e;
}

namespace {

// Sparse exact elimination basis. Rows are inserted fully reduced against
// all earlier rows, so reducing a vector is a single forward pass.
class EliminationBasis {
 public:
  // Returns false if the expression is dependent (reduces to zero).
  bool insert(LinearExpr expr) {
    reduce(expr);
    if (expr.terms().empty()) return false;
    auto leading = *expr.terms().begin();
    LinearExpr normalized;
    normalized.add_scaled(expr, Rational(1) / leading.second);
    pivot_position_[leading.first] = rows_.size();
    rows_.push_back({leading.first, std::move(normalized)});
    return true;
  }

  void reduce(LinearExpr& expr) const {
    for (const Row& row : rows_) {
      Rational c = expr.coefficient(row.pivot);
      if (c != 0) expr.add_scaled(row.expr, -c);
    }
  }

 private:
  struct Row {
    int pivot;
    LinearExpr expr;
  };
  std::vector<Row> rows_;
  std::map<int, std::size_t> pivot_position_;
};

// Remote-setting pair used by the r-th selected relationship of each
// family: (0,1) for r=0, (r-1, r+1) in between, (K-1, K) for r=K.
std::pair<int, int> selected_pair(int k_param, int r) {
  int lo = std::max(r - 1, 0);
  int hi = std::min(r + 1, k_param);
  return {lo, hi};
}

}  // namespace

bool balance_in_ns_span(int k_param) {
  require_k(k_param, "balance_in_ns_span");
  EliminationBasis basis;
  for (int index : hardy_zero_set(k_param)) {
    LinearExpr unit;
    unit.add_term(index, 1);
    basis.insert(std::move(unit));
  }
  for (NsEquality& eq : ns_system(k_param)) {
    basis.insert(std::move(eq.expr));
  }
  LinearExpr target = balance_expression(k_param);
  basis.reduce(target);
  return target.is_zero();
}

ProofCertificate derive_balance_certificate(int k_param) {
  require_k(k_param, "derive_balance_certificate");
  if (k_param > kCertificateBudget) {
    throw BudgetExceeded("derive_balance_certificate: K=" +
                         std::to_string(k_param) + " exceeds budget " +
                         std::to_string(kCertificateBudget));
  }
  const Scenario s(k_param);
  const std::vector<int> zeros = hardy_zero_set(k_param);

  ProofCertificate cert;
  cert.k_param = k_param;

  // Two swap-symmetric subsets of 2K+2 oriented relationships each: the
  // A-party marginals (outcome + forward, outcome - reversed), then the
  // B-party marginals likewise. Summed with unit multipliers they telescope,
  // modulo the zero set, to exactly twice the balance expression.
  for (int subset = 0; subset < 2; ++subset) {
    char party = subset == 0 ? 'A' : 'B';
    for (int neg = 0; neg < 2; ++neg) {
      for (int r = 0; r <= k_param; ++r) {
        auto [lo, hi] = selected_pair(k_param, r);
        int m_first = neg == 0 ? lo : hi;   // minus-outcome rows are reversed
        int m_second = neg == 0 ? hi : lo;
        CertificateTerm term;
        term.equality = equality_id(party, neg, r, m_first, m_second);
        term.multiplier = 1;
        term.subset = subset;
        term.expr = marginal_difference(s, party, neg, r, m_first, m_second);
        term.reduced = term.expr.without_indices(zeros);
        cert.selected.push_back(std::move(term));
      }
    }
  }

  LinearExpr combination;
  for (const CertificateTerm& term : cert.selected) {
    combination.add_scaled(term.expr, term.multiplier);
  }
  combination.add_scaled(balance_expression(k_param), -2);
  cert.residual = combination.without_indices(zeros);
  cert.verified = cert.residual.is_zero();

  if (!cert.verified) {
    throw DerivationFailed(
        "derive_balance_certificate: pattern combination does not cancel at K=" +
        std::to_string(k_param));
  }
  if (!balance_in_ns_span(k_param)) {
    throw DerivationFailed(
        "derive_balance_certificate: elimination path disagrees at K=" +
        std::to_string(k_param));
  }
  return cert;
}

}  // namespace hardychain

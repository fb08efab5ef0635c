#include "hardychain/io.hpp"

#include <cstdio>
#include <sstream>

namespace hardychain {

namespace {

constexpr char kTableOrder[] = "kkp-rowmajor;pp,pm,mp,mm";

void append_fixed(std::string& out, double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  out += buf;
}

}  // namespace

nlohmann::json behavior_to_json(const Behavior& b) {
  return {{"k", b.k()},
          {"order", kTableOrder},
          {"table", std::vector<double>(b.table().begin(), b.table().end())}};
}

Behavior behavior_from_json(const nlohmann::json& j) {
  if (!j.contains("k") || !j.contains("table")) {
    throw WrongLength("behavior_from_json: missing \"k\" or \"table\"");
  }
  if (j.contains("order") && j["order"].get<std::string>() != kTableOrder) {
    throw WrongLength("behavior_from_json: unsupported table order \"" +
                      j["order"].get<std::string>() + "\"");
  }
  auto table = j["table"].get<std::vector<double>>();
  return behavior_from_table(j["k"].get<int>(), table);
}

std::string behavior_to_csv(const Behavior& b, int precision) {
  std::string out = "k,kp,pp,pm,mp,mm\n";
  for (int k = 0; k <= b.k(); ++k) {
    for (int kp = 0; kp <= b.k(); ++kp) {
      out += std::to_string(k) + "," + std::to_string(kp);
      for (int outc = 0; outc < kOutcomesPerPair; ++outc) {
        out += ',';
        append_fixed(out, b.at(k, kp, outc), precision);
      }
      out += '\n';
    }
  }
  return out;
}

nlohmann::json bounds_record_to_json(const BoundsRecord& r) {
  return {{"k", r.k_param},         {"lr_bound", r.lr_bound},
          {"tsirelson", r.tsirelson}, {"algebraic", r.algebraic},
          {"l_k", r.l_k},           {"p_max_qm", r.p_max_qm},
          {"x_star", r.x_star}};
}

std::string bounds_to_csv(std::span<const BoundsRecord> records, int precision) {
  std::string out = "K,lr_bound,tsirelson,algebraic,l_k,p_max_qm,x_star\n";
  for (const BoundsRecord& r : records) {
    out += std::to_string(r.k_param);
    for (double v : {r.lr_bound, r.tsirelson, r.algebraic, r.l_k, r.p_max_qm,
                     r.x_star}) {
      out += ',';
      append_fixed(out, v, precision);
    }
    out += '\n';
  }
  return out;
}

std::string fig1_to_csv(std::span<const BoundsRecord> records, int precision) {
  std::string out = "K,L_K,Pmax_QM,x_star,GPT_limit,LR,Tsirelson,Algebraic\n";
  for (const BoundsRecord& r : records) {
    out += std::to_string(r.k_param);
    for (double v : {r.l_k, r.p_max_qm, r.x_star, 0.5, r.lr_bound, r.tsirelson,
                     r.algebraic}) {
      out += ',';
      append_fixed(out, v, precision);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json certificate_to_json(const ProofCertificate& cert) {
  nlohmann::json terms = nlohmann::json::array();
  for (const CertificateTerm& term : cert.selected) {
    std::ostringstream mult;
    mult << term.multiplier;
    terms.push_back({{"equality", term.equality}, {"multiplier", mult.str()}});
  }
  return {{"k", cert.k_param}, {"terms", terms}, {"verified", cert.verified}};
}

nlohmann::json counts_to_json(const CountsTable& c) {
  return {{"k", c.scenario.k()},
          {"shots", c.shots_per_pair},
          {"seed", c.seed},
          {"rng", kRngScheme},
          {"counts", c.counts}};
}

namespace {

nlohmann::json estimate_to_json(const Estimate& e) {
  return {{"value", e.value}, {"std_error", e.std_error}};
}

}  // namespace

nlohmann::json estimate_report_to_json(const EstimateReport& r) {
  nlohmann::json zeros = nlohmann::json::array();
  for (const auto& [name, est] : r.zero_terms) {
    zeros.push_back({{"constraint", name},
                     {"estimate", est.value},
                     {"std_error", est.std_error}});
  }
  return {{"behavior_hat", behavior_to_json(r.behavior_hat)},
          {"p_k_hat", estimate_to_json(r.p_k_hat)},
          {"chsh_hat", estimate_to_json(r.chsh_hat)},
          {"ch_plus_hat", estimate_to_json(r.ch_plus_hat)},
          {"violation_sigmas", r.violation_sigmas},
          {"hardy_zeros", zeros}};
}

std::string estimate_report_to_csv(const EstimateReport& r, int precision) {
  std::string out = "quantity,estimate,std_error\n";
  auto row = [&out, precision](const char* name, double v, double se) {
    out += name;
    out += ',';
    append_fixed(out, v, precision);
    out += ',';
    append_fixed(out, se, precision);
    out += '\n';
  };
  row("p_k", r.p_k_hat.value, r.p_k_hat.std_error);
  row("chsh", r.chsh_hat.value, r.chsh_hat.std_error);
  row("ch_plus", r.ch_plus_hat.value, r.ch_plus_hat.std_error);
  row("violation_sigmas", r.violation_sigmas, 0.0);
  for (const auto& [name, est] : r.zero_terms) {
    row(name.c_str(), est.value, est.std_error);
  }
  return out;
}

}  // namespace hardychain

#include "hardychain/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <ctime>
#include <fstream>

#include "hardychain/bounds.hpp"
#include "hardychain/io.hpp"
#include "hardychain/proof.hpp"
#include "hardychain/quantum.hpp"
#include "hardychain/simulate.hpp"

namespace hardychain {

namespace {

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

const char* error_type_name(const Error& e) {
  if (dynamic_cast<const WrongLength*>(&e)) return "WrongLength";
  if (dynamic_cast<const NegativeEntry*>(&e)) return "NegativeEntry";
  if (dynamic_cast<const NotNormalized*>(&e)) return "NotNormalized";
  if (dynamic_cast<const SettingOutOfRange*>(&e)) return "SettingOutOfRange";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "BudgetExceeded";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const ZeroShots*>(&e)) return "ZeroShots";
  if (dynamic_cast<const DerivationFailed*>(&e)) return "DerivationFailed";
  return "Error";
}

struct CommandConfig {
  int k = 1;
  int k_max = 1;
  double x = 0.5;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  double tol = kDefaultAnalysisTol;
  std::string format;  // "csv" or "json"
  std::string input;
  std::string output;
  bool full_table = false;
  bool no_timestamp = false;
  int precision = 6;
};

void emit(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error("cannot open output file " + cfg.output);
  file << text;
}

std::string dump(const CommandConfig& cfg, nlohmann::json j) {
  if (!cfg.no_timestamp) j["timestamp"] = iso_timestamp();
  return j.dump(2) + "\n";
}

nlohmann::json hardy_to_json(const HardyReport& h) {
  nlohmann::json zeros = nlohmann::json::array();
  for (const auto& [name, value] : h.zero_terms) {
    zeros.push_back({{"constraint", name}, {"value", value}});
  }
  return {{"p_k", h.p_k},
          {"max_zero_violation", h.max_zero_violation},
          {"zero_terms", zeros}};
}

nlohmann::json analysis_to_json(const Behavior& b) {
  NsReport ns = ns_residual(b);
  HardyReport hardy = hardy_report(b);
  RelationResiduals rel = relation_residuals(b);
  ChValues ch = ch_values(b);
  double chsh = chsh_sum(b);
  double gap = std::abs(chsh - 2.0 * b.k() - 4.0 * hardy.p_k);
  return {{"k", b.k()},
          {"chsh", chsh},
          {"ch_plus", ch.plus},
          {"ch_minus", ch.minus},
          {"ns", {{"max_residual", ns.max_residual},
                  {"worst_constraint", ns.worst_constraint.to_string()}}},
          {"hardy", hardy_to_json(hardy)},
          {"relations", {{"chsh_ch_residual", rel.chsh_ch},
                         {"hardy_balance_residual", rel.hardy_balance},
                         {"chsh_hardy_gap", gap}}}};
}

int cmd_bounds(const CommandConfig& cfg, std::ostream& out, bool fig1_layout) {
  std::vector<BoundsRecord> records = bounds_dataset(cfg.k_max);
  std::string format = cfg.format.empty() ? (fig1_layout ? "csv" : "json") : cfg.format;
  if (format == "csv") {
    emit(cfg, fig1_layout ? fig1_to_csv(records, cfg.precision)
                          : bounds_to_csv(records, cfg.precision),
         out);
    return 0;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundsRecord& r : records) rows.push_back(bounds_record_to_json(r));
  nlohmann::json j{{"k_max", cfg.k_max}, {"records", rows}};
  if (fig1_layout) j["gpt_limit"] = 0.5;
  emit(cfg, dump(cfg, j), out);
  return 0;
}

int cmd_quantum(const CommandConfig& cfg, std::ostream& out) {
  Behavior b = born_behavior(cfg.x, cfg.k);
  if (cfg.format == "csv") {
    emit(cfg, behavior_to_csv(b, cfg.precision), out);
    return 0;
  }
  nlohmann::json j = analysis_to_json(b);
  j["x"] = cfg.x;
  ClosedFormProbs cf = closed_form_probs(cfg.x, cfg.k);
  j["closed_form"] = {{"p00_mm", cf.p00_mm},
                      {"pKK_mm", cf.pKK_mm},
                      {"pKK_pp", cf.pKK_pp},
                      {"zig", cf.zig}};
  j["angles"] = ladder_angles(cfg.x, cfg.k).theta_a;
  if (cfg.full_table) j["behavior"] = behavior_to_json(b);
  emit(cfg, dump(cfg, j), out);
  return 0;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  Behavior b = [&cfg] {
    if (!cfg.input.empty()) {
      std::ifstream file(cfg.input);
      if (!file) throw Error("cannot open input file " + cfg.input);
      nlohmann::json j;
      file >> j;
      return behavior_from_json(j);
    }
    return born_behavior(cfg.x, cfg.k);
  }();

  nlohmann::json j = analysis_to_json(b);
  const auto& rel = j["relations"];
  bool pass = j["ns"]["max_residual"].get<double>() <= cfg.tol &&
              j["hardy"]["max_zero_violation"].get<double>() <= cfg.tol &&
              rel["chsh_ch_residual"].get<double>() <= cfg.tol &&
              rel["hardy_balance_residual"].get<double>() <= cfg.tol &&
              rel["chsh_hardy_gap"].get<double>() <= cfg.tol;
  j["tolerance"] = cfg.tol;
  j["pass"] = pass;
  emit(cfg, dump(cfg, j), out);
  return pass ? 0 : 1;
}

int cmd_prove(const CommandConfig& cfg, std::ostream& out) {
  ProofCertificate cert = derive_balance_certificate(cfg.k);
  emit(cfg, dump(cfg, certificate_to_json(cert)), out);
  return 0;
}

int cmd_lr(const CommandConfig& cfg, std::ostream& out) {
  LrMaxResult r = lr_max_chsh(cfg.k);
  if (cfg.format == "csv") {
    char buf[96];
    std::snprintf(buf, sizeof buf, "K,max_chsh,a_bits,b_bits\n%d,%.*f,%u,%u\n",
                  cfg.k, cfg.precision, r.max_value, r.witness.a_bits,
                  r.witness.b_bits);
    emit(cfg, buf, out);
    return 0;
  }
  nlohmann::json j{{"k", cfg.k},
                   {"max_chsh", r.max_value},
                   {"witness", {{"a_bits", r.witness.a_bits},
                                {"b_bits", r.witness.b_bits}}}};
  emit(cfg, dump(cfg, j), out);
  return 0;
}

int cmd_simulate(const CommandConfig& cfg, std::ostream& out) {
  Behavior b = born_behavior(cfg.x, cfg.k);
  CountsTable counts = sample_counts(b, cfg.shots, cfg.seed);
  EstimateReport report = estimate_report(counts);
  if (cfg.format == "csv") {
    emit(cfg, estimate_report_to_csv(report, cfg.precision), out);
    return 0;
  }
  nlohmann::json j{{"counts", counts_to_json(counts)},
                   {"report", estimate_report_to_json(report)}};
  emit(cfg, dump(cfg, j), out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Chained CHSH/CH analysis of Hardy ladder nonlocality tests"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output, "Write output to this file");
    sub->add_flag("--no-timestamp", cfg.no_timestamp,
                  "Suppress the timestamp field in JSON output");
    sub->add_option("--precision", cfg.precision, "Decimal places in CSV output")
        ->check(CLI::Range(0, 17));
  };
  auto add_k = [&cfg](CLI::App* sub) {
    return sub->add_option("--k", cfg.k, "Ladder parameter K")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_x = [&cfg](CLI::App* sub) {
    return sub->add_option("--x", cfg.x, "Schmidt parameter x in (0,1)")
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* bounds = app.add_subcommand("bounds", "Bound table for K = 1..k-max");
  bounds->add_option("--k-max", cfg.k_max, "Largest K")
      ->required()
      ->check(CLI::Range(1, kBoundsDatasetMaxK));
  add_common(bounds);

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "Bound-curve dataset (Hardy fraction limits vs K) for plotting");
  fig1->add_option("--k-max", cfg.k_max, "Largest K")
      ->required()
      ->check(CLI::Range(1, kBoundsDatasetMaxK));
  add_common(fig1);

  CLI::App* quantum = app.add_subcommand(
      "quantum", "Born-rule ladder behavior with reports and closed forms");
  add_k(quantum);
  add_x(quantum)->required();
  quantum->add_flag("--full-table", cfg.full_table,
                    "Include the full behavior table in JSON output");
  add_common(quantum);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check NS, Hardy zeros, and the chained relations");
  auto* verify_input =
      verify->add_option("--input", cfg.input, "Behavior JSON file");
  auto* verify_x = add_x(verify);
  verify->add_option("--k", cfg.k, "Ladder parameter K")->check(CLI::PositiveNumber);
  verify->add_option("--tol", cfg.tol, "Pass tolerance")->check(CLI::PositiveNumber);
  verify_x->excludes(verify_input);
  add_common(verify);

  CLI::App* prove = app.add_subcommand(
      "prove", "Exact certificate deriving the balance relation from NS");
  add_k(prove);
  add_common(prove);

  CLI::App* lr = app.add_subcommand(
      "lr", "Exhaustive deterministic-strategy maximum of the chained CHSH sum");
  add_k(lr);
  add_common(lr);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Finite-statistics sampling of the quantum ladder behavior");
  add_k(simulate);
  add_x(simulate)->required();
  simulate->add_option("--shots", cfg.shots, "Shots per setting pair")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed, "RNG seed")->required();
  add_common(simulate);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hardy_chain");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(cfg, out, false);
    if (fig1->parsed()) return cmd_bounds(cfg, out, true);
    if (quantum->parsed()) return cmd_quantum(cfg, out);
    if (verify->parsed()) {
      if (cfg.input.empty() && verify_x->count() == 0) {
        err << "usage error: verify needs --input or --x/--k\n";
        return 2;
      }
      return cmd_verify(cfg, out);
    }
    if (prove->parsed()) return cmd_prove(cfg, out);
    if (lr->parsed()) return cmd_lr(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
  } catch (const Error& e) {
    nlohmann::json j{{"error", {{"type", error_type_name(e)}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace hardychain

#pragma once

#include <json.hpp>

#include <span>
#include <string>

#include "hardychain/behavior.hpp"
#include "hardychain/bounds.hpp"
#include "hardychain/proof.hpp"
#include "hardychain/simulate.hpp"

namespace hardychain {

/// { "k": K, "order": "kkp-rowmajor;pp,pm,mp,mm", "table": [...] }.
/// Doubles are written in shortest round-trip form (full precision).
nlohmann::json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);

/// One row per setting pair: k,kp,pp,pm,mp,mm.
std::string behavior_to_csv(const Behavior& b, int precision = 6);

nlohmann::json bounds_record_to_json(const BoundsRecord& r);

/// Columns: K,lr_bound,tsirelson,algebraic,l_k,p_max_qm,x_star.
std::string bounds_to_csv(std::span<const BoundsRecord> records,
                          int precision = 6);

/// Bound-curve dataset for plotting, one row per K:
/// K,L_K,Pmax_QM,x_star,GPT_limit,LR,Tsirelson,Algebraic.
std::string fig1_to_csv(std::span<const BoundsRecord> records,
                        int precision = 6);

/// { "k": K, "terms": [ { "equality": id, "multiplier": "p/q" } ],
///   "verified": true }.
nlohmann::json certificate_to_json(const ProofCertificate& cert);

/// { "k": K, "shots": n, "seed": s, "rng": scheme, "counts": [...] }.
nlohmann::json counts_to_json(const CountsTable& c);

nlohmann::json estimate_report_to_json(const EstimateReport& r);

/// Rows of quantity,estimate,std_error.
std::string estimate_report_to_csv(const EstimateReport& r, int precision = 6);

}  // namespace hardychain

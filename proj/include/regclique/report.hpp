#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regclique/claims.hpp"
#include "regclique/cliques.hpp"
#include "regclique/construction.hpp"
#include "regclique/regularity.hpp"

namespace regclique {

// report_v1 field names, fixed:
//   audit claims:  {"claim", "statement", "holds", "params", "witness"}
//   certificates:  {"property", "holds", "params", "witness"} plus an
//                  optional "note" for not-applicable checks
// params are numbers, witness entries are vertex indices (for the grid
// equality claim, the whole image table of the validated isomorphism).

inline nlohmann::json claim_json(const Claim& c) {
    return {{"claim", c.id},
            {"statement", c.statement},
            {"holds", c.holds},
            {"params", c.params},
            {"witness", c.witness}};
}

inline nlohmann::json report_json(const AuditReport& report) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [name, g6] : report.inputs) inputs[name] = g6;
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : report.claims) claims.push_back(claim_json(c));
    return {{"schema", "report_v1"},
            {"report", report.title},
            {"inputs", inputs},
            {"claims", claims},
            {"all_hold", report.all_hold()}};
}

inline nlohmann::json property_json(const std::string& property, bool holds,
                                    const std::vector<long long>& params,
                                    const std::vector<int>& witness,
                                    const std::optional<std::string>& note = std::nullopt) {
    nlohmann::json out{
        {"property", property}, {"holds", holds}, {"params", params}, {"witness", witness}};
    if (note) out["note"] = *note;
    return out;
}

inline nlohmann::json plan_json(const FtPlan& plan) {
    return {{"t", plan.t},
            {"a", plan.a},
            {"diameter", plan.diameter},
            {"edge_regular", {plan.er.v, plan.er.k, plan.er.lambda}},
            {"intersection_array", {{"b", plan.ia.b}, {"c", plan.ia.c}}},
            {"antipodal_classes", plan.classes},
            {"clique_size", plan.clique_size()}};
}

inline nlohmann::json clique_json(const std::vector<int>& vertices,
                                  const std::optional<int>& nexus) {
    nlohmann::json out{{"vertices", vertices}};
    if (nexus)
        out["nexus"] = *nexus;
    else
        out["nexus"] = nullptr;
    return out;
}

inline nlohmann::json spread_json(const SpreadSearchResult& result) {
    nlohmann::json out;
    switch (result.status) {
        case SpreadStatus::kFound: out["status"] = "found"; break;
        case SpreadStatus::kNone: out["status"] = "none"; break;
        case SpreadStatus::kBudgetExceeded: out["status"] = "budget exceeded"; break;
    }
    out["nodes"] = result.nodes;
    if (result.spread) {
        nlohmann::json parts = nlohmann::json::array();
        for (std::size_t i = 0; i < result.spread->cliques.size(); ++i)
            parts.push_back(clique_json(result.spread->cliques[i], result.spread->nexus[i]));
        out["cliques"] = parts;
    }
    return out;
}

}  // namespace regclique

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace regclique {

// One checked claim in an audit report. params carry the numbers the claim
// is about; witness carries vertex indices (or an isomorphism image table)
// backing the verdict.
struct Claim {
    std::string id;
    std::string statement;
    bool holds = false;
    std::vector<long long> params;
    std::vector<int> witness;
};

struct AuditReport {
    std::string title;
    std::vector<std::pair<std::string, std::string>> inputs;  // name -> graph6
    std::vector<Claim> claims;

    bool all_hold() const {
        for (const auto& c : claims)
            if (!c.holds) return false;
        return true;
    }

    void merge(const AuditReport& other) {
        for (const auto& in : other.inputs) {
            bool present = false;
            for (const auto& mine : inputs) present |= mine.first == in.first;
            if (!present) inputs.push_back(in);
        }
        claims.insert(claims.end(), other.claims.begin(), other.claims.end());
    }
};

}  // namespace regclique

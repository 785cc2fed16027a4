#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indexforge/common.hpp"

namespace indexforge {

enum class ImputeMethod { GrowthRate, HierFromIndicator, HierFromDimension, HierFromPillar };

std::string to_string(ImputeMethod m);

/// Provenance for one imputed cell: where it is, how it was filled, and which
/// cells contributed. Every imputed cell carries exactly one record.
struct ImputationRecord {
    std::string country;
    std::string path;
    ImputeMethod method = ImputeMethod::HierFromIndicator;
    std::vector<std::string> inputs;
    double imputed_value = 0.0;
};

enum class Tier { Tier1, Tier2, Tier3 };

std::string to_string(Tier t);

/// Scores for one country keyed by level path: component ids ("D1.1.total"),
/// indicator ids ("D1.1"), "D4.internal" / "D4.published", pillar ids ("P1")
/// and "total". Cells flagged imputed carry a provenance record on the table.
struct CountryRow {
    std::map<std::string, double> scores;
    std::map<std::string, bool> imputed;
    std::optional<int> rank;
    std::optional<Tier> tier;

    bool has(const std::string& path) const { return scores.count(path) > 0; }
    MaybeValue get(const std::string& path) const {
        auto it = scores.find(path);
        if (it == scores.end()) return std::nullopt;
        return it->second;
    }
    void set(const std::string& path, double value, bool was_imputed = false) {
        scores[path] = value;
        if (was_imputed) imputed[path] = true;
    }
};

struct ScoreTable {
    std::string period;
    std::map<std::string, CountryRow> rows;  // keyed by country code, sorted
    std::vector<ImputationRecord> provenance;

    bool has(const std::string& country, const std::string& path) const {
        auto it = rows.find(country);
        return it != rows.end() && it->second.has(path);
    }
    MaybeValue get(const std::string& country, const std::string& path) const {
        auto it = rows.find(country);
        if (it == rows.end()) return std::nullopt;
        return it->second.get(path);
    }
    std::vector<std::string> countries() const {
        std::vector<std::string> out;
        out.reserve(rows.size());
        for (const auto& [code, row] : rows) out.push_back(code);
        return out;
    }
    /// Map of country -> value for one path, countries lacking it skipped.
    std::map<std::string, double> column(const std::string& path) const {
        std::map<std::string, double> out;
        for (const auto& [code, row] : rows) {
            if (auto v = row.get(path)) out[code] = *v;
        }
        return out;
    }
};

}  // namespace indexforge

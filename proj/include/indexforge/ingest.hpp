#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indexforge/common.hpp"
#include "indexforge/schema.hpp"
#include "indexforge/score_table.hpp"

namespace indexforge {

struct FactsSet;  // rubric.hpp

enum class IncomeGroup { High, UpperMiddle, LowerMiddle, Low };

std::string to_string(IncomeGroup g);
IncomeGroup income_group_from_string(const std::string& s, const std::string& location);

struct CountryMeta {
    std::string code;  // ISO 3166-1 alpha-3, upper case
    std::string name;
    double population = 0.0;
    double gdp = 0.0;
    double gdp_per_capita = 0.0;
    IncomeGroup income_group = IncomeGroup::High;
};

using MetaSet = std::map<std::string, CountryMeta>;

struct Observation {
    std::string country;
    std::string component;
    std::string period;
    MaybeValue value;
};

/// Raw numeric values per (country, component, period) plus country
/// covariates. Immutable once loaded; loading is order-insensitive.
struct ObservationSet {
    std::string schema_id;
    std::string period;
    std::map<std::string, Observation> by_key;  // key = country|component|period
    MetaSet meta;

    static std::string key(const std::string& country, const std::string& component,
                           const std::string& period) {
        return country + "|" + component + "|" + period;
    }
    const Observation* find(const std::string& country, const std::string& component,
                            const std::string& period) const {
        auto it = by_key.find(key(country, component, period));
        return it == by_key.end() ? nullptr : &it->second;
    }
    MaybeValue value(const std::string& country, const std::string& component,
                     const std::string& period) const {
        const Observation* obs = find(country, component, period);
        if (!obs) return std::nullopt;
        return obs->value;
    }
    std::vector<std::string> countries() const {
        std::vector<std::string> out;
        out.reserve(meta.size());
        for (const auto& [code, m] : meta) out.push_back(code);
        return out;
    }
};

using AliasMap = std::map<std::string, std::string>;  // display name -> alpha-3 code

/// `name,code` rows mapping display names to alpha-3 codes.
AliasMap load_aliases(const std::string& text);

/// Resolves a country token to an upper-case alpha-3 code, consulting the
/// alias table for display names. Throws on unresolvable tokens.
std::string resolve_country(const std::string& token, const AliasMap& aliases,
                            const std::string& location);

/// Header `code,name,population,gdp,gdp_per_capita,income_group`. Enforces
/// positivity and the gdp/population consistency bound (5%).
MetaSet load_meta(const std::string& text, const AliasMap& aliases = {});

/// Header `country,component,period,value`; blank value parses as MISSING.
/// Errors: unknown component id, duplicate key, non-numeric value, country
/// tokens that resolve to nothing.
ObservationSet load_observations(const std::string& text, const IndexSchema& schema,
                                 MetaSet meta, const AliasMap& aliases = {});

/// Prior score tables in either long form (`country,path,score`) or the wide
/// form written by emit_score_table; detected from the header. Scores are
/// range-checked into [0,100].
ScoreTable load_prior_scores(const std::string& text, const AliasMap& aliases = {});

/// Cross-checks a dataset against its schema: Errors for structural breaks
/// (missing covariates for ratio components, absent rubric facts, countries
/// without metadata), Warnings for MISSING values (imputation handles those).
ValidationReport validate_dataset(const IndexSchema& schema, const ObservationSet& obs,
                                  const FactsSet& facts);

}  // namespace indexforge

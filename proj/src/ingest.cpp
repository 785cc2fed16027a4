#include "indexforge/ingest.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "indexforge/csv.hpp"
#include "indexforge/rubric.hpp"

namespace indexforge {

namespace {

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

bool is_alpha3(const std::string& s) {
    if (s.size() != 3) return false;
    for (char c : s)
        if (!std::isalpha(static_cast<unsigned char>(c))) return false;
    return true;
}

double parse_number(const std::string& s, const std::string& location) {
    if (s.empty()) throw StructuralError(location, "empty numeric field");
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw StructuralError(location, "trailing junk in number '" + s + "'");
        return v;
    } catch (const StructuralError&) {
        throw;
    } catch (const std::exception&) {
        throw StructuralError(location, "not a number: '" + s + "'");
    }
}

void expect_header(const csv::Table& table, const std::vector<std::string>& expected,
                   const std::string& source) {
    if (table.header != expected) {
        std::string want;
        for (const auto& h : expected) {
            if (!want.empty()) want += ",";
            want += h;
        }
        throw StructuralError(source, "expected header '" + want + "'");
    }
}

}  // namespace

std::string to_string(IncomeGroup g) {
    switch (g) {
        case IncomeGroup::High: return "High";
        case IncomeGroup::UpperMiddle: return "UpperMiddle";
        case IncomeGroup::LowerMiddle: return "LowerMiddle";
        case IncomeGroup::Low: return "Low";
    }
    return "?";
}

IncomeGroup income_group_from_string(const std::string& s, const std::string& location) {
    if (s == "High") return IncomeGroup::High;
    if (s == "UpperMiddle") return IncomeGroup::UpperMiddle;
    if (s == "LowerMiddle") return IncomeGroup::LowerMiddle;
    if (s == "Low") return IncomeGroup::Low;
    throw StructuralError(location, "invalid income group '" + s + "'");
}

AliasMap load_aliases(const std::string& text) {
    auto table = csv::parse(text, "aliases");
    expect_header(table, {"name", "code"}, "aliases");
    AliasMap out;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        std::string loc = "aliases:" + std::to_string(i + 2);
        if (!is_alpha3(row[1])) throw StructuralError(loc, "code must be alpha-3: '" + row[1] + "'");
        out[row[0]] = upper(row[1]);
    }
    return out;
}

std::string resolve_country(const std::string& token, const AliasMap& aliases,
                            const std::string& location) {
    if (auto it = aliases.find(token); it != aliases.end()) return it->second;
    std::string up = upper(token);
    if (is_alpha3(up)) return up;
    throw StructuralError(location, "unknown country '" + token + "'");
}

MetaSet load_meta(const std::string& text, const AliasMap& aliases) {
    auto table = csv::parse(text, "meta");
    expect_header(table, {"code", "name", "population", "gdp", "gdp_per_capita", "income_group"},
                  "meta");
    MetaSet out;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        std::string loc = "meta:" + std::to_string(i + 2);
        CountryMeta m;
        m.code = resolve_country(row[0], aliases, loc);
        m.name = row[1];
        m.population = parse_number(row[2], loc + ":population");
        m.gdp = parse_number(row[3], loc + ":gdp");
        m.gdp_per_capita = parse_number(row[4], loc + ":gdp_per_capita");
        m.income_group = income_group_from_string(row[5], loc + ":income_group");
        if (m.population <= 0) throw StructuralError(loc, "population must be > 0");
        if (m.gdp <= 0) throw StructuralError(loc, "gdp must be > 0");
        if (m.gdp_per_capita > 0) {
            double implied = m.gdp / m.population;
            if (std::abs(implied - m.gdp_per_capita) / m.gdp_per_capita >= 0.05)
                throw StructuralError(loc, "gdp / population disagrees with gdp_per_capita by >=5%");
        }
        if (out.count(m.code)) throw StructuralError(loc, "duplicate country " + m.code);
        out[m.code] = std::move(m);
    }
    return out;
}

ObservationSet load_observations(const std::string& text, const IndexSchema& schema,
                                 MetaSet meta, const AliasMap& aliases) {
    auto table = csv::parse(text, "observations");
    expect_header(table, {"country", "component", "period", "value"}, "observations");
    std::set<std::string> known_components;
    for (auto& id : schema.component_ids()) known_components.insert(id);

    ObservationSet out;
    out.schema_id = schema.id;
    out.period = schema.period;
    out.meta = std::move(meta);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        std::string loc = "observations:" + std::to_string(i + 2);
        Observation obs;
        obs.country = resolve_country(row[0], aliases, loc);
        obs.component = row[1];
        obs.period = row[2];
        if (!known_components.count(obs.component))
            throw StructuralError(loc, "unknown component id '" + obs.component + "'");
        if (!row[3].empty()) obs.value = parse_number(row[3], loc + ":value");
        std::string key = ObservationSet::key(obs.country, obs.component, obs.period);
        if (out.by_key.count(key))
            throw StructuralError(loc, "duplicate observation (" + obs.country + ", " +
                                           obs.component + ", " + obs.period + ")");
        out.by_key.emplace(std::move(key), std::move(obs));
    }
    return out;
}

namespace {

void insert_score(ScoreTable& table, const std::string& country, const std::string& path,
                  double score, const std::string& loc) {
    if (score < 0.0 || score > 100.0)
        throw StructuralError(loc, "score out of range [0,100]: " + std::to_string(score));
    auto& row = table.rows[country];
    if (row.has(path)) throw StructuralError(loc, "duplicate cell (" + country + ", " + path + ")");
    row.set(path, score);
}

}  // namespace

ScoreTable load_prior_scores(const std::string& text, const AliasMap& aliases) {
    auto table = csv::parse(text, "scores");
    ScoreTable out;
    if (table.header == std::vector<std::string>{"country", "path", "score"}) {
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            std::string loc = "scores:" + std::to_string(i + 2);
            std::string country = resolve_country(row[0], aliases, loc);
            insert_score(out, country, row[1], parse_number(row[2], loc), loc);
        }
        return out;
    }
    // wide form, as written by emit_score_table
    if (table.header.size() < 2 || table.header[0] != "country")
        throw StructuralError("scores", "expected 'country,path,score' or a wide score table");
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        std::string loc = "scores:" + std::to_string(i + 2);
        std::string country = resolve_country(row[0], aliases, loc);
        for (std::size_t c = 1; c < table.header.size(); ++c) {
            const std::string& col = table.header[c];
            if (col == "imputed") continue;
            if (row[c].empty()) continue;
            if (col == "rank") {
                out.rows[country].rank = static_cast<int>(parse_number(row[c], loc));
                continue;
            }
            if (col == "tier") continue;  // derivable; ignored on load
            // dimension columns are published scores
            std::string path = col;
            if (col != "total" && col.front() == 'D') path = col + ".published";
            insert_score(out, country, path, parse_number(row[c], loc), loc);
        }
    }
    return out;
}

ValidationReport validate_dataset(const IndexSchema& schema, const ObservationSet& obs,
                                  const FactsSet& facts) {
    ValidationReport report;
    for (const auto& [key, o] : obs.by_key) {
        if (!obs.meta.count(o.country))
            report.error(o.country, "observation country missing from metadata");
        if (!o.value)
            report.warning(o.country + "/" + o.component + "/" + o.period, "value MISSING");
    }
    for (const auto& [code, meta] : obs.meta) {
        for (const auto& pillar : schema.pillars) {
            for (const auto& dim : pillar.dimensions) {
                for (const auto& ind : dim.indicators) {
                    std::string loc = code + "/" + ind.id;
                    if (ind.kind == IndicatorKind::Rubric) {
                        if (!facts.has(code)) {
                            report.error(loc, "rubric facts absent for country " + code);
                        } else if (ind.rubric_id && !known_rubric_id(*ind.rubric_id)) {
                            report.error(loc, "unknown rubric_id '" + *ind.rubric_id + "'");
                        }
                        continue;
                    }
                    for (const auto& comp : ind.components) {
                        if (comp.basis == ComponentBasis::PerCapita && meta.population <= 0)
                            report.error(code + "/" + comp.id,
                                         "population covariate required by PerCapita component");
                        if (comp.basis == ComponentBasis::PerGDP && meta.gdp <= 0)
                            report.error(code + "/" + comp.id,
                                         "gdp covariate required by PerGDP component");
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace indexforge

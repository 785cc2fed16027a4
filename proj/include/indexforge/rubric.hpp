#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "indexforge/common.hpp"

namespace indexforge {

/// Inputs are dataset-author determinations; the engine never judges whether
/// a document "counts", it only applies the scoring rules.
struct StrategyFacts {
    bool released = false;
    bool has_implementation_plan = false;
    bool mentions_training = false;
    bool has_ethics = false;
};

enum class ComprehensiveStatus {
    None,
    PlanNoDraft,
    Drafting,
    ApprovedNotInForce,
    InForce,
    RegionalInForce,
    RegionalDrafting,
};

std::string to_string(ComprehensiveStatus s);
ComprehensiveStatus comprehensive_status_from_string(const std::string& s,
                                                     const std::string& location);

struct LegislationFacts {
    ComprehensiveStatus comprehensive_status = ComprehensiveStatus::None;
    bool vertical_law = false;
    bool data_protection_ai = false;
};

struct ParticipationFacts {
    std::set<std::string> mechanisms_signed;
    bool iso_member = false;
};

struct CountryFacts {
    StrategyFacts strategy;
    LegislationFacts legislation;
    ParticipationFacts participation;
    bool bodies = false;      // governance bodies established
    bool principles = false;  // national AI principles issued
    bool impact = false;      // impact assessment mechanisms introduced
    bool standards = false;   // standards/certification mechanisms developed
};

struct FactsSet {
    std::vector<std::string> mechanism_catalog;  // declared, ordered
    std::map<std::string, CountryFacts> countries;

    bool has(const std::string& code) const { return countries.count(code) > 0; }
};

/// JSON document: {"mechanisms": [...], "countries": {CODE: {strategy:{...},
/// legislation:{...}, participation:{...}, bodies, principles, impact,
/// standards}}}. Enumerations spelled exactly as the type definitions.
FactsSet load_facts(const std::string& document);

/// Strategy rubric: released gates everything; each follow-up flag scores
/// 100 only when the strategy exists and the flag holds.
std::array<double, 4> score_strategy(const StrategyFacts& f);

inline double score_boolean(bool flag) { return flag ? 100.0 : 0.0; }

/// Legislation rubric. Comprehensive status: in force (national or regional)
/// -> 100; a reviewable draft or an approved-but-not-in-force law -> 50;
/// plans without a draft, regional drafts, or nothing -> 0. Vertical and
/// data-protection laws are plain 0/100 flags.
std::array<double, 3> score_legislation(const LegislationFacts& f);

/// Participation rubric: linear share of the declared mechanism catalog, and
/// a 0/100 standardization-membership flag. Unknown mechanism ids throw.
std::array<double, 2> score_participation(const ParticipationFacts& f,
                                          const std::vector<std::string>& catalog);

/// Dispatch for schema rubric_id values ("strategy.released",
/// "legislation.comprehensive", "participation.mechanisms", "bodies", ...).
double score_rubric_indicator(const std::string& rubric_id, const CountryFacts& facts,
                              const std::vector<std::string>& catalog);

/// True if the rubric_id is one this engine can score.
bool known_rubric_id(const std::string& rubric_id);

}  // namespace indexforge

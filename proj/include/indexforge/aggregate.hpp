#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indexforge/common.hpp"
#include "indexforge/normalize.hpp"
#include "indexforge/schema.hpp"
#include "indexforge/score_table.hpp"

namespace indexforge {

/// Mean of the indicator scores; when the dimension restandardizes, the mean
/// is re-normalized across the cohort afterwards ("readjust the mean to 50").
/// `cohort` holds every country's pre-standardization dimension mean.
double dimension_score(const std::vector<double>& indicator_scores, bool restandardize,
                       const std::map<std::string, double>& cohort, const std::string& country,
                       SigmaMode mode = SigmaMode::Std);

/// Published score: identity for positive dimensions, 100 - internal for
/// negative ones (higher published is always better).
double finalize_dimension(double internal, Polarity polarity);

double pillar_score(const std::vector<double>& published_dimension_scores);
double index_score(const std::vector<double>& pillar_scores);

struct RankEntry {
    std::string country;
    double total = 0.0;  // unrounded
    int rank = 0;
};

struct RankTable {
    std::vector<RankEntry> entries;  // descending by total

    std::optional<int> rank_of(const std::string& country) const {
        for (const auto& e : entries)
            if (e.country == country) return e.rank;
        return std::nullopt;
    }
};

/// Descending by unrounded total, ties broken by ascending country code;
/// ranks are 1..N with no gaps.
RankTable rank_countries(const std::map<std::string, double>& totals);

struct TierAssignment {
    std::string country;
    Tier tier = Tier::Tier3;
};

/// Tier1: total > 60; Tier2: 50 <= total <= 60; Tier3: total < 50.
std::vector<TierAssignment> assign_tiers(const RankTable& ranks);
Tier tier_of(double total);

enum class GovernanceType {
    AllRoundLeader,
    GovernanceOverachiever,
    GovernanceShortfaller,
    FoundationSeeker,
};

std::string to_string(GovernanceType t);

struct TypologyAssignment {
    std::string country;
    GovernanceType type = GovernanceType::FoundationSeeker;
};

/// Pluggable classification rule over the per-country pillar signature.
///
/// TierThreshold (default): the two wide-dispersion pillars (development and
/// instruments) are compared against the tier-1 boundary; a country above it
/// on both is an all-round leader, above it only on instruments an
/// overachiever; below it on instruments, the cohort median of the
/// development pillar splits shortfallers from foundation seekers.
///
/// MedianSignature: every pillar is compared against its cohort median
/// (leaders above all four; overachievers below on development, above on
/// environment and instruments; shortfallers above on development, below on
/// instruments; seekers below on both), with unmatched countries assigned by
/// fewest signature violations and the precedence order leader >
/// overachiever > shortfaller > seeker.
struct TypologyRule {
    enum class Kind { TierThreshold, MedianSignature };
    Kind kind = Kind::TierThreshold;
    double high_threshold = 60.0;       // tier-1 boundary
    std::size_t development_pillar = 0;  // index into the schema's pillar list
    std::size_t environment_pillar = 1;
    std::size_t instruments_pillar = 2;
    std::size_t effectiveness_pillar = 3;
};

/// `pillar_table`: country -> pillar scores in schema order (all present).
/// Every country receives exactly one type under any rule configuration.
std::vector<TypologyAssignment> classify_typology(
    const std::map<std::string, std::vector<double>>& pillar_table, const TypologyRule& rule = {});

/// Mean per group of the selected paths (pillar ids or published dimension
/// ids). Unlabeled countries are an error.
std::map<std::string, std::map<std::string, double>> group_averages(
    const ScoreTable& table, const std::map<std::string, std::string>& grouping,
    const std::vector<std::string>& paths);

struct CorrelationResult {
    std::optional<double> pearson;   // absent when either side has zero variance
    std::optional<double> spearman;
    int n = 0;
};

/// Product-moment and rank correlation over the key intersection; n < 3 is a
/// structural error.
CorrelationResult correlate(const std::map<std::string, double>& x,
                            const std::map<std::string, double>& y);

struct YoYEntry {
    std::string country;
    int prev_rank = 0;  // within the common subset
    int new_rank = 0;
    int delta = 0;      // prev - new; positive means the country moved up
};

/// Both rankings are re-ranked within the common-country subset before
/// differencing. Empty intersection is a structural error.
std::vector<YoYEntry> yoy_compare(const RankTable& current, const RankTable& previous);

}  // namespace indexforge

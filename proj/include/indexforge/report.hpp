#pragma once

#include <string>
#include <vector>

#include "indexforge/aggregate.hpp"
#include "indexforge/ingest.hpp"
#include "indexforge/schema.hpp"
#include "indexforge/score_table.hpp"

namespace indexforge {

enum class TableFormat { CSV, JSONdoc, Markdown };

struct EmitOptions {
    TableFormat format = TableFormat::CSV;
    bool full_precision = false;  // default: display rounding, 1 decimal
};

/// Score table in publication column order: country, total, rank, then each
/// pillar's dimensions followed by the pillar itself, plus an `imputed`
/// provenance column listing filled paths. Deterministic ordering throughout.
std::string emit_score_table(const ScoreTable& table, const IndexSchema& schema,
                             const EmitOptions& options = {});

struct ProfileRanking {
    std::string dimension;
    std::string name;
    int rank = 0;
};

struct ProfileDocument {
    std::string code;
    std::string name;
    int rank = 0;
    int cohort_size = 0;
    double total = 0.0;
    double population = 0.0;
    double gdp_per_capita = 0.0;
    IncomeGroup income_group = IncomeGroup::High;
    std::vector<std::pair<std::string, double>> pillars;  // (id, score)
    std::vector<int> pillar_ranks;
    std::vector<ProfileRanking> highest;  // top-2 dimension rankings, ties included
    std::vector<ProfileRanking> lowest;   // bottom-2, ties included

    std::string to_text() const;
};

/// Country profile: header covariates, pillar scores with per-pillar ranks,
/// and the country's best/worst published-dimension rankings.
ProfileDocument emit_profile(const std::string& country, const ScoreTable& table,
                             const MetaSet& meta, const IndexSchema& schema);

enum class PlotKind { ScoreBar, ScatterVsCovariate, GroupRadar, TrendByYear, DistributionByTopic };

PlotKind plot_kind_from_string(const std::string& s);

struct PlotPoint {
    std::string label;  // country code or period label, never display names
    std::vector<double> values;
};

struct PlotSeries {
    std::string kind;
    std::string x_label;
    std::string y_label;
    std::string series_label;
    std::vector<PlotPoint> points;
};

struct PlotDocument {
    std::vector<PlotSeries> series;
    std::vector<std::string> warnings;

    std::string to_json() const;
};

/// Machine-readable figure data; no rendering. ScatterVsCovariate takes the
/// covariate name ("gdp_per_capita", "population", "gdp"); GroupRadar emits
/// one series per income group over the published dimensions.
PlotDocument emit_plot_series(PlotKind kind, const ScoreTable& table, const MetaSet& meta,
                              const IndexSchema& schema,
                              const std::string& covariate = "gdp_per_capita",
                              const ScoreTable* previous = nullptr);

/// `country,path,method,value,inputs` rows for every imputed cell.
std::string emit_imputation_report(const std::vector<ImputationRecord>& records);

}  // namespace indexforge

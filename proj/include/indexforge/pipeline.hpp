#pragma once

#include <optional>

#include "indexforge/aggregate.hpp"
#include "indexforge/impute.hpp"
#include "indexforge/ingest.hpp"
#include "indexforge/normalize.hpp"
#include "indexforge/rubric.hpp"
#include "indexforge/schema.hpp"
#include "indexforge/score_table.hpp"

namespace indexforge {

struct PipelineOptions {
    SigmaMode sigma_mode = SigmaMode::Std;
    PercentileFitPolicy percentile_fit;
    TypologyRule typology;
};

struct PipelineResult {
    ScoreTable table;            // complete: components up to total, ranks, tiers
    ValidationReport warnings;   // non-fatal findings collected along the way
};

/// The full scoring pipeline: growth imputation on raw values, ratio
/// derivation, per-component normalization, rubric scoring, hierarchical
/// imputation, dimension/pillar/total aggregation, ranking and tiering.
/// Structural breaks throw; run validate_dataset first to get them as a
/// report instead.
PipelineResult compute_scores(const IndexSchema& schema, const ObservationSet& obs,
                              const FactsSet& facts,
                              const ObservationSet* previous_obs = nullptr,
                              const PipelineOptions& options = {});

/// Aggregates a table that already holds published dimension scores (e.g. a
/// prior edition's table): fills pillars, totals, ranks and tiers per the
/// schema. Dimensions must be complete for every country in the table.
ScoreTable aggregate_from_dimensions(const IndexSchema& schema, const ScoreTable& dimensions);

/// Per-country pillar vectors in schema order, for typology classification.
std::map<std::string, std::vector<double>> pillar_table(const IndexSchema& schema,
                                                        const ScoreTable& table);

}  // namespace indexforge

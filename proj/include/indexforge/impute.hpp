#pragma once

#include <utility>
#include <vector>

#include "indexforge/ingest.hpp"
#include "indexforge/schema.hpp"
#include "indexforge/score_table.hpp"

namespace indexforge {

struct GrowthImputeResult {
    ObservationSet filled;
    std::vector<ImputationRecord> records;
};

/// First imputation stage, on raw values: a component MISSING now but present
/// in the previous period is filled with previous * g, where g is the mean of
/// v_t / v_{t-1} over countries holding both periods (non-positive baselines
/// excluded). Components with no usable pairs are left MISSING for the
/// hierarchical stage; inability to impute is deferral, not failure.
GrowthImputeResult impute_growth(const ObservationSet& current, const ObservationSet& previous);

struct HierImputeResult {
    ScoreTable filled;
    std::vector<ImputationRecord> records;
};

/// Second stage, on scores: a MISSING component score becomes the mean of its
/// present sibling components; a MISSING indicator the mean of its present
/// sibling indicators; a MISSING dimension internal the mean of its present
/// sibling dimensions in the pillar. Parents are recomputed afterwards (the
/// mean-fill is their fixed point). A country with no scores at all is a
/// structural error.
HierImputeResult impute_hierarchical(const ScoreTable& scores, const IndexSchema& schema);

}  // namespace indexforge

#pragma once

#include <map>
#include <string>

#include "indexforge/common.hpp"
#include "indexforge/ingest.hpp"

namespace indexforge {

/// Dispersion divisor for the affine z-score. The published methodology calls
/// sigma "the statistical variance", but the 25*(x-mu)/sigma + 50 map only
/// spans the intended range when sigma has the units of x, so the default is
/// the population standard deviation. Both readings are available; ordering
/// is identical either way.
enum class SigmaMode { Std, Variance };

struct NormalizationParams {
    double mu = 0.0;
    double sigma = 0.0;  // population dispersion over non-MISSING values
};

using ValueMap = std::map<std::string, MaybeValue>;
using ScoreMap = std::map<std::string, MaybeValue>;

/// Cross-country mean and dispersion over the present values.
/// Fewer than 2 present values is a structural error.
NormalizationParams compute_params(const ValueMap& values, SigmaMode mode,
                                   const std::string& location);

/// score = clamp(25*(x - mu)/sigma + 50, 0, 100); MISSING propagates.
/// sigma == 0 (all values identical) scores every present value 50.
ScoreMap simple_normalize(const ValueMap& values, const NormalizationParams& params);

/// Convenience overload computing params from the input.
ScoreMap simple_normalize(const ValueMap& values, SigmaMode mode = SigmaMode::Std,
                          const std::string& location = "");

struct PercentileFitPolicy {
    int rounds = 4;
    double peel_fraction = 0.25;   // top fraction of the original count peeled per round
    double band_width = 25.0;      // 100 / rounds
};

/// Iterative re-standardization: each round simple-normalizes the remaining
/// values, peels the top ceil(peel_fraction*N0) by raw value, and maps their
/// within-round scores into the round's descending band; the final round
/// absorbs the rest. Total and strictly monotone on distinct raw values.
/// Fewer present values than rounds falls back to simple_normalize with a
/// Warning in `report`.
ScoreMap percentile_fit_normalize(const ValueMap& values, const PercentileFitPolicy& policy,
                                  SigmaMode mode = SigmaMode::Std,
                                  ValidationReport* report = nullptr,
                                  const std::string& location = "");

/// value / population or value / gdp. Missing or non-positive covariates are
/// structural errors naming the country.
double derive_ratio(double value, const CountryMeta& meta, ComponentBasis basis);

/// Arithmetic mean of the non-MISSING entries; all-MISSING is a structural
/// error (hierarchical imputation must run first).
double combine_components(const std::vector<MaybeValue>& scores,
                          const std::string& location = "");

}  // namespace indexforge

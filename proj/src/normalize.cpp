#include "indexforge/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace indexforge {

namespace {

double clamp_score(double s) { return std::clamp(s, 0.0, 100.0); }

}  // namespace

NormalizationParams compute_params(const ValueMap& values, SigmaMode /*mode*/,
                                   const std::string& location) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& [k, v] : values) {
        if (v) {
            sum += *v;
            ++n;
        }
    }
    if (n < 2) throw StructuralError(location, "need at least 2 values to normalize");
    NormalizationParams p;
    p.mu = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& [k, v] : values) {
        if (v) ss += (*v - p.mu) * (*v - p.mu);
    }
    // population dispersion: the cohort is the whole evaluated population
    p.sigma = std::sqrt(ss / static_cast<double>(n));
    return p;
}

ScoreMap simple_normalize(const ValueMap& values, const NormalizationParams& params) {
    ScoreMap out;
    for (const auto& [k, v] : values) {
        if (!v) {
            out[k] = std::nullopt;
            continue;
        }
        if (params.sigma == 0.0) {
            out[k] = 50.0;  // all values identical: the mean target
            continue;
        }
        out[k] = clamp_score(25.0 * (*v - params.mu) / params.sigma + 50.0);
    }
    return out;
}

ScoreMap simple_normalize(const ValueMap& values, SigmaMode mode, const std::string& location) {
    auto params = compute_params(values, mode, location);
    if (mode == SigmaMode::Variance && params.sigma != 0.0) {
        NormalizationParams p{params.mu, params.sigma * params.sigma};
        return simple_normalize(values, p);
    }
    return simple_normalize(values, params);
}

namespace {

struct RawEntry {
    std::string key;
    double raw;
};

void validate_policy(const PercentileFitPolicy& policy, const std::string& location) {
    if (policy.rounds < 1) throw StructuralError(location, "percentile-fit needs rounds >= 1");
    if (policy.peel_fraction <= 0.0 || policy.peel_fraction >= 1.0)
        throw StructuralError(location, "peel_fraction must lie in (0,1)");
    if (policy.band_width <= 0.0) throw StructuralError(location, "band_width must be positive");
    if (policy.rounds * policy.peel_fraction > 1.0 + 1e-9)
        throw StructuralError(location, "rounds * peel_fraction must not exceed 1");
}

}  // namespace

ScoreMap percentile_fit_normalize(const ValueMap& values, const PercentileFitPolicy& policy,
                                  SigmaMode mode, ValidationReport* report,
                                  const std::string& location) {
    validate_policy(policy, location);
    ScoreMap out;
    std::vector<RawEntry> remaining;
    for (const auto& [k, v] : values) {
        if (v) remaining.push_back({k, *v});
        else out[k] = std::nullopt;
    }
    std::size_t n0 = remaining.size();
    if (n0 < static_cast<std::size_t>(policy.rounds)) {
        if (report)
            report->warning(location, "fewer values than percentile-fit rounds; using simple normalization");
        auto simple = simple_normalize(values, mode, location);
        return simple;
    }
    // ascending by raw, key as deterministic tiebreak; the top of the vector
    // is the extraction end
    std::sort(remaining.begin(), remaining.end(), [](const RawEntry& a, const RawEntry& b) {
        if (a.raw != b.raw) return a.raw < b.raw;
        return a.key < b.key;
    });
    std::size_t peel = static_cast<std::size_t>(
        std::ceil(policy.peel_fraction * static_cast<double>(n0) - 1e-9));
    peel = std::max<std::size_t>(peel, 1);

    for (int round = 1; round <= policy.rounds && !remaining.empty(); ++round) {
        double hi = 100.0 - (round - 1) * policy.band_width;
        double lo = std::max(0.0, 100.0 - round * policy.band_width);

        double sum = 0.0;
        for (const auto& e : remaining) sum += e.raw;
        double mu = sum / static_cast<double>(remaining.size());
        double ss = 0.0;
        for (const auto& e : remaining) ss += (e.raw - mu) * (e.raw - mu);
        double sigma = std::sqrt(ss / static_cast<double>(remaining.size()));

        if (sigma == 0.0) {
            // degenerate dispersion: everything left is identical
            double score = round == 1 ? 50.0 : (lo + hi) / 2.0;
            for (const auto& e : remaining) out[e.key] = score;
            remaining.clear();
            break;
        }

        std::size_t take = round == policy.rounds ? remaining.size()
                                                  : std::min(peel, remaining.size());
        std::size_t cut = remaining.size() - take;
        // keep equal raw values together: extend the subset across the tie
        while (cut > 0 && remaining[cut - 1].raw == remaining[cut].raw) --cut;

        double div = mode == SigmaMode::Std ? sigma : sigma * sigma;
        double z_lo = (remaining[cut].raw - mu) / div;
        double z_hi = (remaining.back().raw - mu) / div;
        std::size_t m = remaining.size() - cut;
        for (std::size_t i = cut; i < remaining.size(); ++i) {
            double score;
            if (z_hi == z_lo) {
                score = (lo + hi) / 2.0;
            } else {
                double t = ((remaining[i].raw - mu) / div - z_lo) / (z_hi - z_lo);
                // interior affine map: the band's top stays exclusive so bands
                // never collide and the overall order stays strict
                score = lo + (hi - lo) * (1.0 + t * (static_cast<double>(m) - 1.0)) /
                                 (static_cast<double>(m) + 1.0);
            }
            out[remaining[i].key] = score;
        }
        remaining.resize(cut);
    }
    return out;
}

double derive_ratio(double value, const CountryMeta& meta, ComponentBasis basis) {
    double covariate = 0.0;
    const char* what = "";
    switch (basis) {
        case ComponentBasis::PerCapita:
            covariate = meta.population;
            what = "population";
            break;
        case ComponentBasis::PerGDP:
            covariate = meta.gdp;
            what = "gdp";
            break;
        case ComponentBasis::Absolute:
            throw StructuralError(meta.code, "derive_ratio on an Absolute component");
    }
    if (covariate <= 0.0)
        throw StructuralError(meta.code, std::string(what) + " covariate missing or non-positive");
    return value / covariate;
}

double combine_components(const std::vector<MaybeValue>& scores, const std::string& location) {
    return mean_of_present(scores, location);
}

}  // namespace indexforge

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "indexforge/common.hpp"

namespace indexforge {

enum class Polarity { Positive, Negative };
enum class IndicatorKind { Numeric, Rubric, Survey };
enum class ComponentBasis { Absolute, PerCapita, PerGDP };
enum class NormalizerKind { Simple, PercentileFit, None };

struct ComponentSpec {
    std::string id;
    ComponentBasis basis = ComponentBasis::Absolute;
    NormalizerKind normalizer = NormalizerKind::Simple;

    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

struct IndicatorSpec {
    std::string id;
    std::string name;
    IndicatorKind kind = IndicatorKind::Numeric;
    std::optional<std::string> rubric_id;  // present iff kind == Rubric
    std::vector<ComponentSpec> components;

    friend bool operator==(const IndicatorSpec&, const IndicatorSpec&) = default;
};

struct DimensionSpec {
    std::string id;
    std::string name;
    Polarity polarity = Polarity::Positive;
    bool restandardize = false;
    std::vector<IndicatorSpec> indicators;
    std::string notes;

    friend bool operator==(const DimensionSpec&, const DimensionSpec&) = default;
};

struct PillarSpec {
    std::string id;
    std::string name;
    std::vector<DimensionSpec> dimensions;

    friend bool operator==(const PillarSpec&, const PillarSpec&) = default;
};

/// Declarative index hierarchy: pillars -> dimensions -> indicators ->
/// components. The tree is configuration, not code; immutable after parse and
/// safe to share across threads.
struct IndexSchema {
    std::string id;
    std::string period;
    std::vector<PillarSpec> pillars;

    friend bool operator==(const IndexSchema&, const IndexSchema&) = default;

    const ComponentSpec* find_component(const std::string& component_id) const;
    const IndicatorSpec* find_indicator(const std::string& indicator_id) const;
    const DimensionSpec* find_dimension(const std::string& dimension_id) const;
    const PillarSpec* find_pillar(const std::string& pillar_id) const;
    /// Indicator that owns the given component, or nullptr.
    const IndicatorSpec* indicator_of_component(const std::string& component_id) const;

    std::vector<std::string> component_ids() const;
    std::size_t dimension_count() const;
    std::size_t indicator_count() const;
};

/// Parses the JSON schema document. Applies defaults (polarity=Positive,
/// restandardize=false, normalizer=Simple), rejects unknown fields, and
/// reports syntax/semantic errors with the offending node path.
IndexSchema parse_schema(const std::string& document);

/// Re-checks every schema invariant; empty report iff the tree is well formed.
ValidationReport validate_schema(const IndexSchema& schema);

/// Inverse of parse_schema up to structural identity (round-trip property).
std::string serialize_schema(const IndexSchema& schema);

std::string to_string(Polarity p);
std::string to_string(IndicatorKind k);
std::string to_string(ComponentBasis b);
std::string to_string(NormalizerKind n);

}  // namespace indexforge

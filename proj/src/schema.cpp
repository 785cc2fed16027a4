#include "indexforge/schema.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace indexforge {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw StructuralError(path, message);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) fail(path, "unknown field '" + it.key() + "'");
    }
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field '" + key + "'");
    if (!it->is_string()) fail(path + "." + key, "expected a string");
    return it->get<std::string>();
}

Polarity parse_polarity(const std::string& s, const std::string& path) {
    if (s == "Positive") return Polarity::Positive;
    if (s == "Negative") return Polarity::Negative;
    fail(path, "invalid polarity '" + s + "'");
}

IndicatorKind parse_kind(const std::string& s, const std::string& path) {
    if (s == "Numeric") return IndicatorKind::Numeric;
    if (s == "Rubric") return IndicatorKind::Rubric;
    if (s == "Survey") return IndicatorKind::Survey;
    fail(path, "invalid indicator kind '" + s + "'");
}

ComponentBasis parse_basis(const std::string& s, const std::string& path) {
    if (s == "Absolute") return ComponentBasis::Absolute;
    if (s == "PerCapita") return ComponentBasis::PerCapita;
    if (s == "PerGDP") return ComponentBasis::PerGDP;
    fail(path, "invalid basis '" + s + "'");
}

NormalizerKind parse_normalizer(const std::string& s, const std::string& path) {
    if (s == "Simple") return NormalizerKind::Simple;
    if (s == "PercentileFit") return NormalizerKind::PercentileFit;
    if (s == "None") return NormalizerKind::None;
    fail(path, "invalid normalizer '" + s + "'");
}

ComponentSpec parse_component(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    reject_unknown(node, {"id", "basis", "normalizer"}, path);
    ComponentSpec spec;
    spec.id = require_string(node, "id", path);
    if (node.contains("basis"))
        spec.basis = parse_basis(require_string(node, "basis", path), path + ".basis");
    if (node.contains("normalizer"))
        spec.normalizer =
            parse_normalizer(require_string(node, "normalizer", path), path + ".normalizer");
    return spec;
}

IndicatorSpec parse_indicator(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    reject_unknown(node, {"id", "name", "kind", "rubric_id", "components"}, path);
    IndicatorSpec spec;
    spec.id = require_string(node, "id", path);
    spec.name = require_string(node, "name", path);
    spec.kind = parse_kind(require_string(node, "kind", path), path + ".kind");
    if (node.contains("rubric_id")) {
        if (!node["rubric_id"].is_string()) fail(path + ".rubric_id", "expected a string");
        spec.rubric_id = node["rubric_id"].get<std::string>();
    }
    if (spec.kind == IndicatorKind::Rubric && !spec.rubric_id)
        fail(path, "indicator '" + spec.id + "' has kind Rubric but no rubric_id");
    auto comps = node.find("components");
    if (comps == node.end() || !comps->is_array() || comps->empty())
        fail(path, "indicator '" + spec.id + "' needs a non-empty components list");
    for (std::size_t i = 0; i < comps->size(); ++i)
        spec.components.push_back(
            parse_component((*comps)[i], path + ".components[" + std::to_string(i) + "]"));
    return spec;
}

DimensionSpec parse_dimension(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    reject_unknown(node, {"id", "name", "polarity", "restandardize", "indicators", "notes"}, path);
    DimensionSpec spec;
    spec.id = require_string(node, "id", path);
    spec.name = require_string(node, "name", path);
    if (node.contains("polarity"))
        spec.polarity = parse_polarity(require_string(node, "polarity", path), path + ".polarity");
    if (node.contains("restandardize")) {
        if (!node["restandardize"].is_boolean()) fail(path + ".restandardize", "expected a bool");
        spec.restandardize = node["restandardize"].get<bool>();
    }
    if (node.contains("notes")) {
        if (!node["notes"].is_string()) fail(path + ".notes", "expected a string");
        spec.notes = node["notes"].get<std::string>();
    }
    auto inds = node.find("indicators");
    if (inds == node.end() || !inds->is_array() || inds->empty())
        fail(path, "dimension '" + spec.id + "' needs a non-empty indicators list");
    for (std::size_t i = 0; i < inds->size(); ++i)
        spec.indicators.push_back(
            parse_indicator((*inds)[i], path + ".indicators[" + std::to_string(i) + "]"));
    return spec;
}

PillarSpec parse_pillar(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    reject_unknown(node, {"id", "name", "dimensions"}, path);
    PillarSpec spec;
    spec.id = require_string(node, "id", path);
    spec.name = require_string(node, "name", path);
    auto dims = node.find("dimensions");
    if (dims == node.end() || !dims->is_array() || dims->empty())
        fail(path, "pillar '" + spec.id + "' needs a non-empty dimensions list");
    for (std::size_t i = 0; i < dims->size(); ++i)
        spec.dimensions.push_back(
            parse_dimension((*dims)[i], path + ".dimensions[" + std::to_string(i) + "]"));
    return spec;
}

/// Walks the tree collecting (id -> paths); duplicate ids are semantic errors
/// reported with every occurrence.
void check_unique_ids(const IndexSchema& schema) {
    std::map<std::string, std::vector<std::string>> seen;
    for (std::size_t p = 0; p < schema.pillars.size(); ++p) {
        const auto& pillar = schema.pillars[p];
        std::string ppath = "pillars[" + std::to_string(p) + "]";
        seen[pillar.id].push_back(ppath);
        for (std::size_t d = 0; d < pillar.dimensions.size(); ++d) {
            const auto& dim = pillar.dimensions[d];
            std::string dpath = ppath + ".dimensions[" + std::to_string(d) + "]";
            seen[dim.id].push_back(dpath);
            for (std::size_t i = 0; i < dim.indicators.size(); ++i) {
                const auto& ind = dim.indicators[i];
                std::string ipath = dpath + ".indicators[" + std::to_string(i) + "]";
                seen[ind.id].push_back(ipath);
                for (std::size_t c = 0; c < ind.components.size(); ++c)
                    seen[ind.components[c].id].push_back(ipath + ".components[" +
                                                         std::to_string(c) + "]");
            }
        }
    }
    for (const auto& [id, paths] : seen) {
        if (paths.size() > 1) {
            std::string all;
            for (const auto& p : paths) {
                if (!all.empty()) all += ", ";
                all += p;
            }
            fail(all, "duplicate id '" + id + "'");
        }
    }
}

}  // namespace

IndexSchema parse_schema(const std::string& document) {
    json root;
    try {
        root = json::parse(document);
    } catch (const json::parse_error& e) {
        throw StructuralError("", std::string("schema syntax error: ") + e.what());
    }
    if (!root.is_object()) fail("", "schema root must be an object");
    reject_unknown(root, {"id", "period", "pillars"}, "");
    IndexSchema schema;
    schema.id = require_string(root, "id", "");
    schema.period = require_string(root, "period", "");
    auto pillars = root.find("pillars");
    if (pillars == root.end() || !pillars->is_array() || pillars->empty())
        fail("", "schema needs a non-empty pillars list");
    for (std::size_t i = 0; i < pillars->size(); ++i)
        schema.pillars.push_back(
            parse_pillar((*pillars)[i], "pillars[" + std::to_string(i) + "]"));
    check_unique_ids(schema);
    return schema;
}

ValidationReport validate_schema(const IndexSchema& schema) {
    ValidationReport report;
    std::map<std::string, int> id_counts;
    auto count_id = [&](const std::string& id) { ++id_counts[id]; };
    if (schema.pillars.empty()) report.error("schema", "no pillars");
    for (const auto& pillar : schema.pillars) {
        count_id(pillar.id);
        if (pillar.dimensions.empty())
            report.error(pillar.id, "pillar has no dimensions");
        for (const auto& dim : pillar.dimensions) {
            count_id(dim.id);
            if (dim.indicators.empty())
                report.error(pillar.id + "/" + dim.id, "dimension has no indicators");
            for (const auto& ind : dim.indicators) {
                count_id(ind.id);
                std::string loc = pillar.id + "/" + dim.id + "/" + ind.id;
                if (ind.components.empty()) report.error(loc, "indicator has no components");
                if ((ind.kind == IndicatorKind::Rubric) != ind.rubric_id.has_value())
                    report.error(loc, ind.kind == IndicatorKind::Rubric
                                          ? "kind Rubric requires rubric_id"
                                          : "rubric_id only allowed on Rubric indicators");
                for (const auto& comp : ind.components) {
                    count_id(comp.id);
                    if (ind.kind == IndicatorKind::Numeric &&
                        comp.normalizer == NormalizerKind::None)
                        report.error(loc + "/" + comp.id, "Numeric requires normalizer");
                }
            }
        }
    }
    for (const auto& [id, n] : id_counts)
        if (n > 1) report.error(id, "duplicate id (" + std::to_string(n) + " occurrences)");
    return report;
}

namespace {

json component_to_json(const ComponentSpec& c) {
    json node;
    node["id"] = c.id;
    node["basis"] = to_string(c.basis);
    node["normalizer"] = to_string(c.normalizer);
    return node;
}

json indicator_to_json(const IndicatorSpec& ind) {
    json node;
    node["id"] = ind.id;
    node["name"] = ind.name;
    node["kind"] = to_string(ind.kind);
    if (ind.rubric_id) node["rubric_id"] = *ind.rubric_id;
    node["components"] = json::array();
    for (const auto& c : ind.components) node["components"].push_back(component_to_json(c));
    return node;
}

}  // namespace

std::string serialize_schema(const IndexSchema& schema) {
    json root;
    root["id"] = schema.id;
    root["period"] = schema.period;
    root["pillars"] = json::array();
    for (const auto& pillar : schema.pillars) {
        json pnode;
        pnode["id"] = pillar.id;
        pnode["name"] = pillar.name;
        pnode["dimensions"] = json::array();
        for (const auto& dim : pillar.dimensions) {
            json dnode;
            dnode["id"] = dim.id;
            dnode["name"] = dim.name;
            dnode["polarity"] = to_string(dim.polarity);
            dnode["restandardize"] = dim.restandardize;
            if (!dim.notes.empty()) dnode["notes"] = dim.notes;
            dnode["indicators"] = json::array();
            for (const auto& ind : dim.indicators)
                dnode["indicators"].push_back(indicator_to_json(ind));
            pnode["dimensions"].push_back(std::move(dnode));
        }
        root["pillars"].push_back(std::move(pnode));
    }
    return root.dump(2) + "\n";
}

const ComponentSpec* IndexSchema::find_component(const std::string& component_id) const {
    for (const auto& p : pillars)
        for (const auto& d : p.dimensions)
            for (const auto& i : d.indicators)
                for (const auto& c : i.components)
                    if (c.id == component_id) return &c;
    return nullptr;
}

const IndicatorSpec* IndexSchema::find_indicator(const std::string& indicator_id) const {
    for (const auto& p : pillars)
        for (const auto& d : p.dimensions)
            for (const auto& i : d.indicators)
                if (i.id == indicator_id) return &i;
    return nullptr;
}

const DimensionSpec* IndexSchema::find_dimension(const std::string& dimension_id) const {
    for (const auto& p : pillars)
        for (const auto& d : p.dimensions)
            if (d.id == dimension_id) return &d;
    return nullptr;
}

const PillarSpec* IndexSchema::find_pillar(const std::string& pillar_id) const {
    for (const auto& p : pillars)
        if (p.id == pillar_id) return &p;
    return nullptr;
}

const IndicatorSpec* IndexSchema::indicator_of_component(const std::string& component_id) const {
    for (const auto& p : pillars)
        for (const auto& d : p.dimensions)
            for (const auto& i : d.indicators)
                for (const auto& c : i.components)
                    if (c.id == component_id) return &i;
    return nullptr;
}

std::vector<std::string> IndexSchema::component_ids() const {
    std::vector<std::string> out;
    for (const auto& p : pillars)
        for (const auto& d : p.dimensions)
            for (const auto& i : d.indicators)
                for (const auto& c : i.components) out.push_back(c.id);
    return out;
}

std::size_t IndexSchema::dimension_count() const {
    std::size_t n = 0;
    for (const auto& p : pillars) n += p.dimensions.size();
    return n;
}

std::size_t IndexSchema::indicator_count() const {
    std::size_t n = 0;
    for (const auto& p : pillars)
        for (const auto& d : p.dimensions) n += d.indicators.size();
    return n;
}

std::string to_string(Polarity p) {
    return p == Polarity::Positive ? "Positive" : "Negative";
}

std::string to_string(IndicatorKind k) {
    switch (k) {
        case IndicatorKind::Numeric: return "Numeric";
        case IndicatorKind::Rubric: return "Rubric";
        case IndicatorKind::Survey: return "Survey";
    }
    return "?";
}

std::string to_string(ComponentBasis b) {
    switch (b) {
        case ComponentBasis::Absolute: return "Absolute";
        case ComponentBasis::PerCapita: return "PerCapita";
        case ComponentBasis::PerGDP: return "PerGDP";
    }
    return "?";
}

std::string to_string(NormalizerKind n) {
    switch (n) {
        case NormalizerKind::Simple: return "Simple";
        case NormalizerKind::PercentileFit: return "PercentileFit";
        case NormalizerKind::None: return "None";
    }
    return "?";
}

}  // namespace indexforge

#include "agency/schema.hpp"

#include <cmath>

#include "agency/errors.hpp"

namespace agency {

FeatureSpec FeatureSpec::numeric(std::string name, double min, double max) {
    FeatureSpec s;
    s.name = std::move(name);
    s.kind = FeatureKind::numeric;
    s.min = min;
    s.max = max;
    return s;
}

FeatureSpec FeatureSpec::ordinal(std::string name, int levels) {
    FeatureSpec s;
    s.name = std::move(name);
    s.kind = FeatureKind::ordinal;
    s.levels = levels;
    return s;
}

FeatureSpec FeatureSpec::categorical(std::string name, int cardinality) {
    FeatureSpec s;
    s.name = std::move(name);
    s.kind = FeatureKind::categorical;
    s.levels = cardinality;
    return s;
}

FeatureSchema::FeatureSchema(std::vector<FeatureSpec> specs) : specs_(std::move(specs)) {
    for (const auto& s : specs_) {
        if (s.name.empty()) throw ContractError("schema: feature with empty name");
        if (s.kind == FeatureKind::numeric) {
            if (!(s.min < s.max))
                throw ContractError("schema: numeric feature '" + s.name + "' needs min < max");
        } else if (s.levels < 2) {
            throw ContractError("schema: feature '" + s.name + "' needs at least 2 levels");
        }
    }
}

int FeatureSchema::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < specs_.size(); ++i)
        if (specs_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool FeatureSchema::all_numeric() const {
    for (const auto& s : specs_)
        if (s.kind != FeatureKind::numeric) return false;
    return true;
}

bool FeatureSchema::value_ok(std::size_t i, double v) const {
    const FeatureSpec& s = specs_[i];
    if (!std::isfinite(v)) return false;
    if (s.kind == FeatureKind::numeric) return true;
    return v == std::floor(v) && v >= 0.0 && v <= double(s.levels - 1);
}

bool FeatureSchema::operator==(const FeatureSchema& other) const {
    if (specs_.size() != other.specs_.size()) return false;
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        const auto& a = specs_[i];
        const auto& b = other.specs_[i];
        if (a.name != b.name || a.kind != b.kind || a.levels != b.levels || a.min != b.min ||
            a.max != b.max)
            return false;
    }
    return true;
}

nlohmann::json FeatureSchema::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : specs_) {
        nlohmann::json f;
        f["name"] = s.name;
        switch (s.kind) {
            case FeatureKind::numeric:
                f["kind"] = "numeric";
                f["min"] = s.min;
                f["max"] = s.max;
                break;
            case FeatureKind::ordinal:
                f["kind"] = "ordinal";
                f["levels"] = s.levels;
                break;
            case FeatureKind::categorical:
                f["kind"] = "categorical";
                f["levels"] = s.levels;
                break;
        }
        arr.push_back(std::move(f));
    }
    return arr;
}

FeatureSchema FeatureSchema::from_json(const nlohmann::json& j) {
    std::vector<FeatureSpec> specs;
    for (const auto& f : j) {
        const std::string kind = f.at("kind").get<std::string>();
        const std::string name = f.at("name").get<std::string>();
        if (kind == "numeric") {
            specs.push_back(FeatureSpec::numeric(name, f.at("min").get<double>(),
                                                 f.at("max").get<double>()));
        } else if (kind == "ordinal") {
            specs.push_back(FeatureSpec::ordinal(name, f.at("levels").get<int>()));
        } else if (kind == "categorical") {
            specs.push_back(FeatureSpec::categorical(name, f.at("levels").get<int>()));
        } else {
            throw LoadError("schema: unknown feature kind '" + kind + "'");
        }
    }
    return FeatureSchema(std::move(specs));
}

FeatureVector::FeatureVector(SchemaPtr schema, std::vector<double> values)
    : schema_(std::move(schema)), values_(std::move(values)) {
    validate();
}

void FeatureVector::validate() const {
    if (!schema_) throw ContractError("feature vector without schema");
    if (values_.size() != schema_->size())
        throw ContractError("feature vector length " + std::to_string(values_.size()) +
                            " != schema length " + std::to_string(schema_->size()));
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!schema_->value_ok(i, values_[i]))
            throw ContractError("feature '" + schema_->at(i).name + "' out of range: " +
                                std::to_string(values_[i]));
}

FeatureVector FeatureVector::with(std::size_t i, double v) const {
    std::vector<double> vals = values_;
    vals.at(i) = v;
    return FeatureVector(schema_, std::move(vals));
}

bool FeatureVector::operator==(const FeatureVector& other) const {
    return values_ == other.values_ && *schema_ == *other.schema_;
}

}  // namespace agency

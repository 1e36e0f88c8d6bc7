#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace agency {

enum class FeatureKind { numeric, ordinal, categorical };

struct FeatureSpec {
    std::string name;
    FeatureKind kind = FeatureKind::numeric;
    // Numeric range used for [0,1] normalization in nearest-neighbor lookups.
    double min = 0.0;
    double max = 1.0;
    // Level count for ordinal axes / cardinality for categorical axes.
    int levels = 0;

    double lo() const { return kind == FeatureKind::numeric ? min : 0.0; }
    double hi() const { return kind == FeatureKind::numeric ? max : double(levels - 1); }

    static FeatureSpec numeric(std::string name, double min, double max);
    static FeatureSpec ordinal(std::string name, int levels);
    static FeatureSpec categorical(std::string name, int cardinality);
};

class FeatureSchema {
public:
    FeatureSchema() = default;
    explicit FeatureSchema(std::vector<FeatureSpec> specs);

    std::size_t size() const { return specs_.size(); }
    const FeatureSpec& at(std::size_t i) const { return specs_.at(i); }
    const std::vector<FeatureSpec>& specs() const { return specs_; }
    int index_of(const std::string& name) const;  // -1 if absent

    bool all_numeric() const;

    // Validates one value against axis i (range / integrality).
    bool value_ok(std::size_t i, double v) const;

    bool operator==(const FeatureSchema& other) const;

    nlohmann::json to_json() const;
    static FeatureSchema from_json(const nlohmann::json& j);

private:
    std::vector<FeatureSpec> specs_;
};

using SchemaPtr = std::shared_ptr<const FeatureSchema>;

// An ordered feature vector bound to its schema.  Invariants are checked on
// construction and after every mutation through set().
class FeatureVector {
public:
    FeatureVector() = default;
    FeatureVector(SchemaPtr schema, std::vector<double> values);

    const FeatureSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    FeatureVector with(std::size_t i, double v) const;

    bool operator==(const FeatureVector& other) const;

private:
    void validate() const;

    SchemaPtr schema_;
    std::vector<double> values_;
};

}  // namespace agency

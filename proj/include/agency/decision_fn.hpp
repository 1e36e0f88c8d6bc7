#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agency/schema.hpp"

namespace agency {

// Black-box positive-real-valued decision function over a fixed schema.
// Implementations must be pure: equal inputs give bitwise-equal outputs.
class DecisionFunction {
public:
    virtual ~DecisionFunction() = default;
    virtual double evaluate_raw(const FeatureVector& x) const = 0;
    virtual const FeatureSchema& schema() const = 0;
    virtual std::string name() const = 0;
};

using DecisionFnPtr = std::shared_ptr<const DecisionFunction>;

// Checked entry point: rejects schema mismatches and non-positive outputs.
double evaluate(const DecisionFunction& df, const FeatureVector& x);

// Plain linear decision function D(x) = intercept + w.x (handy in tests and
// as the `linear` synthetic kind's backend).
class LinearDecisionFn : public DecisionFunction {
public:
    LinearDecisionFn(SchemaPtr schema, std::vector<double> weights, double intercept);
    double evaluate_raw(const FeatureVector& x) const override;
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "linear"; }
    const std::vector<double>& weights() const { return weights_; }
    double intercept() const { return intercept_; }

private:
    SchemaPtr schema_;
    std::vector<double> weights_;
    double intercept_;
};

}  // namespace agency

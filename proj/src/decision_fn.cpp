#include "agency/decision_fn.hpp"

#include <cmath>

#include "agency/errors.hpp"

namespace agency {

double evaluate(const DecisionFunction& df, const FeatureVector& x) {
    if (!(x.schema() == df.schema()))
        throw ContractError("evaluate: feature vector schema does not match '" + df.name() +
                            "' schema");
    double v = df.evaluate_raw(x);
    if (!std::isfinite(v) || v <= 0.0)
        throw ContractError("evaluate: decision function '" + df.name() +
                            "' returned a non-positive value " + std::to_string(v));
    return v;
}

LinearDecisionFn::LinearDecisionFn(SchemaPtr schema, std::vector<double> weights,
                                   double intercept)
    : schema_(std::move(schema)), weights_(std::move(weights)), intercept_(intercept) {
    if (weights_.size() != schema_->size())
        throw ContractError("linear decision fn: weight count != schema size");
}

double LinearDecisionFn::evaluate_raw(const FeatureVector& x) const {
    double v = intercept_;
    for (std::size_t i = 0; i < weights_.size(); ++i) v += weights_[i] * x[i];
    return v;
}

}  // namespace agency

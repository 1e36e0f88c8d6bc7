#pragma once

#include <string>
#include <vector>

#include "agency/decision_fn.hpp"

namespace agency {

// Nearest-neighbor decision function over stored (features, decision) pairs:
// answers every query with the decision of the closest cached point under a
// weighted L1 distance on features normalized to [0,1] by their schema
// ranges.  Distance ties break toward the lowest row index.
class QueryCache : public DecisionFunction {
public:
    QueryCache(SchemaPtr schema, std::vector<std::vector<double>> points,
               std::vector<double> decisions, std::vector<double> weights = {});

    double evaluate_raw(const FeatureVector& x) const override;
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "query_cache"; }

    std::size_t size() const { return decisions_.size(); }
    std::size_t nearest_index(const FeatureVector& x) const;
    double distance(const FeatureVector& x, std::size_t row) const;
    const std::vector<double>& point(std::size_t row) const { return points_[row]; }
    double decision(std::size_t row) const { return decisions_[row]; }

private:
    SchemaPtr schema_;
    std::vector<std::vector<double>> points_;
    std::vector<double> decisions_;
    std::vector<double> weights_;
    std::vector<double> inv_range_;
};

// Loads the cache CSV (header: feature names then `decision`).  Errors name
// the offending 1-based data row.
QueryCache load_query_cache(const std::string& path, SchemaPtr schema,
                            std::vector<double> weights = {});

}  // namespace agency

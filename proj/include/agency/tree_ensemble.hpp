#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "agency/decision_fn.hpp"
#include "agency/schema.hpp"

namespace agency {

// Flat binary tree; node 0 is the root.  Split nodes route x[feature] <
// threshold to `left`, otherwise to `right`.
struct TreeNode {
    bool is_leaf = true;
    double value = 0.0;  // leaf prediction in [0,1]
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
    double predict(const FeatureVector& x) const;
    int depth() const;
};

// Mean-aggregated bag of trees over one schema.
class TreeEnsemble {
public:
    TreeEnsemble() = default;
    TreeEnsemble(SchemaPtr schema, std::vector<DecisionTree> trees);

    double predict(const FeatureVector& x) const;
    const FeatureSchema& schema() const { return *schema_; }
    const SchemaPtr& schema_ptr() const { return schema_; }
    const std::vector<DecisionTree>& trees() const { return trees_; }

    nlohmann::json to_json() const;
    static TreeEnsemble from_json(const nlohmann::json& j);

    void save(const std::string& path) const;
    static TreeEnsemble load(const std::string& path);

    bool operator==(const TreeEnsemble& other) const;

private:
    void validate() const;
    SchemaPtr schema_;
    std::vector<DecisionTree> trees_;
};

}  // namespace agency

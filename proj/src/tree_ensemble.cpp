#include "agency/tree_ensemble.hpp"

#include <fstream>

#include "agency/errors.hpp"

namespace agency {

double DecisionTree::predict(const FeatureVector& x) const {
    int i = 0;
    while (!nodes[i].is_leaf) {
        const TreeNode& n = nodes[i];
        i = x[static_cast<std::size_t>(n.feature)] < n.threshold ? n.left : n.right;
    }
    return nodes[i].value;
}

int DecisionTree::depth() const {
    // Depth of the root is 0.
    std::vector<int> d(nodes.size(), 0);
    int max_d = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].is_leaf) continue;
        d[static_cast<std::size_t>(nodes[i].left)] = d[i] + 1;
        d[static_cast<std::size_t>(nodes[i].right)] = d[i] + 1;
        max_d = std::max(max_d, d[i] + 1);
    }
    return max_d;
}

TreeEnsemble::TreeEnsemble(SchemaPtr schema, std::vector<DecisionTree> trees)
    : schema_(std::move(schema)), trees_(std::move(trees)) {
    validate();
}

void TreeEnsemble::validate() const {
    if (!schema_) throw ContractError("ensemble without schema");
    if (trees_.empty()) throw ContractError("ensemble with no trees");
    for (const auto& t : trees_) {
        if (t.nodes.empty()) throw ContractError("tree with no nodes");
        for (const auto& n : t.nodes) {
            if (n.is_leaf) {
                if (n.value < 0.0 || n.value > 1.0)
                    throw ContractError("leaf prediction outside [0,1]");
            } else {
                if (n.feature < 0 || n.feature >= static_cast<int>(schema_->size()))
                    throw ContractError("split feature index out of schema range");
                if (n.left < 0 || n.right < 0 || n.left >= static_cast<int>(t.nodes.size()) ||
                    n.right >= static_cast<int>(t.nodes.size()))
                    throw ContractError("split child index out of range");
            }
        }
    }
}

double TreeEnsemble::predict(const FeatureVector& x) const {
    double sum = 0.0;
    for (const auto& t : trees_) sum += t.predict(x);
    return sum / static_cast<double>(trees_.size());
}

nlohmann::json TreeEnsemble::to_json() const {
    nlohmann::json j;
    j["schema"] = schema_->to_json();
    j["aggregation"] = "mean";
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& t : trees_) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const auto& n : t.nodes) {
            if (n.is_leaf) {
                nodes.push_back({{"leaf", true}, {"value", n.value}});
            } else {
                nodes.push_back({{"feature", n.feature},
                                 {"threshold", n.threshold},
                                 {"left", n.left},
                                 {"right", n.right}});
            }
        }
        trees.push_back({{"nodes", std::move(nodes)}});
    }
    j["trees"] = std::move(trees);
    return j;
}

TreeEnsemble TreeEnsemble::from_json(const nlohmann::json& j) {
    if (j.at("aggregation").get<std::string>() != "mean")
        throw LoadError("ensemble: unsupported aggregation");
    auto schema = std::make_shared<FeatureSchema>(FeatureSchema::from_json(j.at("schema")));
    std::vector<DecisionTree> trees;
    for (const auto& tj : j.at("trees")) {
        DecisionTree t;
        for (const auto& nj : tj.at("nodes")) {
            TreeNode n;
            if (nj.contains("leaf")) {
                n.is_leaf = true;
                n.value = nj.at("value").get<double>();
            } else {
                n.is_leaf = false;
                n.feature = nj.at("feature").get<int>();
                n.threshold = nj.at("threshold").get<double>();
                n.left = nj.at("left").get<int>();
                n.right = nj.at("right").get<int>();
            }
            t.nodes.push_back(n);
        }
        trees.push_back(std::move(t));
    }
    return TreeEnsemble(std::move(schema), std::move(trees));
}

void TreeEnsemble::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw LoadError(path + ": cannot open for writing");
    out << to_json().dump(2) << "\n";
}

TreeEnsemble TreeEnsemble::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(path + ": cannot open ensemble file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw LoadError(path + ": bad ensemble JSON: " + e.what());
    }
    return from_json(j);
}

bool TreeEnsemble::operator==(const TreeEnsemble& other) const {
    if (!(*schema_ == *other.schema_) || trees_.size() != other.trees_.size()) return false;
    for (std::size_t t = 0; t < trees_.size(); ++t) {
        const auto& a = trees_[t].nodes;
        const auto& b = other.trees_[t].nodes;
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_leaf != b[i].is_leaf || a[i].value != b[i].value ||
                a[i].feature != b[i].feature || a[i].threshold != b[i].threshold ||
                a[i].left != b[i].left || a[i].right != b[i].right)
                return false;
        }
    }
    return true;
}

}  // namespace agency

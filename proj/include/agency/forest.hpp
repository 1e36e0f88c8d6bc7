#pragma once

#include <cstdint>
#include <vector>

#include "agency/tree_ensemble.hpp"

namespace agency {

struct ForestConfig {
    int n_trees = 100;
    int max_depth = 8;
    int min_leaf = 5;
    // 1.0 means "use every row exactly once" so a single tree degenerates to
    // a deterministic CART; anything below samples floor(frac*n) rows with
    // replacement.
    double bag_fraction = 0.7;
    // 0 selects ceil(sqrt(n_features)) per split.
    int feature_subset = 0;
    std::uint64_t seed = 1;
};

struct Dataset {
    SchemaPtr schema;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;  // binary {0,1}
};

struct TrainReport {
    TreeEnsemble ensemble;
    bool degenerate = false;  // all-one-class training set: constant predictor
};

// Greedy Gini CART bagging.  Deterministic given the config seed; per-tree
// bootstrap seeds are derived from it by tree index.
TrainReport train_forest(const Dataset& data, const ForestConfig& config);

// Rank-based AUC (Mann-Whitney, ties counted half).  Returns 0.5 when either
// class is absent.
double auc_score(const std::vector<double>& scores, const std::vector<int>& labels);

// Deterministic holdout split of row indices: shuffles with a seed derived
// from `seed` and the "holdout" tag, puts the first `test_fraction` share
// into test.
void holdout_split(std::size_t n, double test_fraction, std::uint64_t seed,
                   std::vector<std::size_t>& train_idx, std::vector<std::size_t>& test_idx);

}  // namespace agency

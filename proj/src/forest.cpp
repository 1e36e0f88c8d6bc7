#include "agency/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "agency/errors.hpp"
#include "agency/rng.hpp"

namespace agency {

namespace {

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double impurity = 0.0;  // weighted Gini of the split
};

class TreeGrower {
public:
    TreeGrower(const Dataset& data, const ForestConfig& cfg, Rng& rng)
        : data_(data), cfg_(cfg), rng_(rng) {
        n_features_ = static_cast<int>(data.schema->size());
        subset_size_ = cfg.feature_subset > 0
                           ? std::min(cfg.feature_subset, n_features_)
                           : static_cast<int>(std::ceil(std::sqrt(double(n_features_))));
    }

    DecisionTree grow(std::vector<std::size_t> sample) {
        DecisionTree tree;
        grow_node(tree, std::move(sample), 0);
        return tree;
    }

private:
    int make_leaf(DecisionTree& tree, const std::vector<std::size_t>& sample) {
        double sum = 0;
        for (auto i : sample) sum += data_.labels[i];
        TreeNode leaf;
        leaf.is_leaf = true;
        leaf.value = sum / double(sample.size());
        tree.nodes.push_back(leaf);
        return static_cast<int>(tree.nodes.size() - 1);
    }

    std::vector<int> pick_features() {
        if (subset_size_ >= n_features_) {
            std::vector<int> all(n_features_);
            std::iota(all.begin(), all.end(), 0);
            return all;  // no rng draws: full-subset training stays seed-free
        }
        std::vector<int> pool(n_features_);
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> chosen;
        for (int k = 0; k < subset_size_; ++k) {
            std::size_t j = k + rng_.below(pool.size() - k);
            std::swap(pool[k], pool[j]);
            chosen.push_back(pool[k]);
        }
        // Ascending order so the strict-improvement sweep breaks ties toward
        // the lowest feature index.
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    SplitChoice best_split(const std::vector<std::size_t>& sample) {
        SplitChoice best;
        const std::size_t n = sample.size();
        std::vector<int> features = pick_features();
        std::vector<std::pair<double, int>> vals(n);  // (feature value, label)
        for (int f : features) {
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t row = sample[i];
                vals[i] = {data_.rows[row][static_cast<std::size_t>(f)], data_.labels[row]};
            }
            std::sort(vals.begin(), vals.end());
            long long pos_left = 0, left = 0;
            long long pos_total = 0;
            for (auto& [v, y] : vals) pos_total += y;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                ++left;
                pos_left += vals[i].second;
                if (vals[i].first == vals[i + 1].first) continue;  // not a boundary
                long long right = static_cast<long long>(n) - left;
                if (left < cfg_.min_leaf || right < cfg_.min_leaf) continue;
                long long pos_right = pos_total - pos_left;
                double gl = 2.0 * double(pos_left) * double(left - pos_left) / double(left);
                double gr = 2.0 * double(pos_right) * double(right - pos_right) / double(right);
                double impurity = (gl + gr) / double(n);
                if (!best.found || impurity < best.impurity) {
                    best.found = true;
                    best.feature = f;
                    best.threshold = (vals[i].first + vals[i + 1].first) / 2.0;
                    best.impurity = impurity;
                }
            }
        }
        return best;
    }

    int grow_node(DecisionTree& tree, std::vector<std::size_t> sample, int depth) {
        bool pure = true;
        for (std::size_t i = 1; i < sample.size(); ++i)
            if (data_.labels[sample[i]] != data_.labels[sample[0]]) {
                pure = false;
                break;
            }
        if (pure || depth >= cfg_.max_depth ||
            sample.size() < 2 * static_cast<std::size_t>(cfg_.min_leaf))
            return make_leaf(tree, sample);

        SplitChoice split = best_split(sample);
        if (!split.found) return make_leaf(tree, sample);

        TreeNode node;
        node.is_leaf = false;
        node.feature = split.feature;
        node.threshold = split.threshold;
        tree.nodes.push_back(node);
        int self = static_cast<int>(tree.nodes.size() - 1);

        std::vector<std::size_t> left, right;
        for (auto i : sample)
            (data_.rows[i][static_cast<std::size_t>(split.feature)] < split.threshold ? left
                                                                                      : right)
                .push_back(i);
        sample.clear();
        sample.shrink_to_fit();
        tree.nodes[static_cast<std::size_t>(self)].left = grow_node(tree, std::move(left), depth + 1);
        tree.nodes[static_cast<std::size_t>(self)].right =
            grow_node(tree, std::move(right), depth + 1);
        return self;
    }

    const Dataset& data_;
    const ForestConfig& cfg_;
    Rng& rng_;
    int n_features_ = 0;
    int subset_size_ = 0;
};

}  // namespace

TrainReport train_forest(const Dataset& data, const ForestConfig& config) {
    if (!data.schema || data.rows.empty()) throw ContractError("train_forest: empty dataset");
    if (data.rows.size() != data.labels.size())
        throw ContractError("train_forest: rows/labels size mismatch");
    for (int y : data.labels)
        if (y != 0 && y != 1) throw ContractError("train_forest: labels must be binary 0/1");
    if (config.n_trees <= 0 || config.max_depth <= 0 || config.min_leaf <= 0 ||
        config.bag_fraction <= 0.0 || config.bag_fraction > 1.0)
        throw ContractError("train_forest: config values must be positive");

    const std::size_t n = data.rows.size();
    bool all_same = true;
    for (int y : data.labels)
        if (y != data.labels[0]) {
            all_same = false;
            break;
        }

    std::vector<DecisionTree> trees;
    for (int t = 0; t < config.n_trees; ++t) {
        Rng rng(derive_seed(config.seed, "tree", static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> sample;
        if (config.bag_fraction == 1.0) {
            sample.resize(n);
            std::iota(sample.begin(), sample.end(), std::size_t{0});
        } else {
            std::size_t m = std::max<std::size_t>(
                1, static_cast<std::size_t>(std::floor(config.bag_fraction * double(n))));
            sample.reserve(m);
            for (std::size_t i = 0; i < m; ++i) sample.push_back(rng.below(n));
        }
        TreeGrower grower(data, config, rng);
        trees.push_back(grower.grow(std::move(sample)));
    }

    TrainReport report{TreeEnsemble(data.schema, std::move(trees)), all_same};
    return report;
}

double auc_score(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) throw ContractError("auc: size mismatch");
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    double pos = 0, neg = 0;
    for (int y : labels) (y ? pos : neg) += 1;
    if (pos == 0 || neg == 0) return 0.5;
    // Sum of positive ranks with midranks for ties.
    double rank_sum = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
        double mid_rank = (double(i) + double(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            if (labels[order[k]]) rank_sum += mid_rank;
        i = j + 1;
    }
    return (rank_sum - pos * (pos + 1) / 2.0) / (pos * neg);
}

void holdout_split(std::size_t n, double test_fraction, std::uint64_t seed,
                   std::vector<std::size_t>& train_idx, std::vector<std::size_t>& test_idx) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(derive_seed(seed, "holdout"));
    rng.shuffle(order);
    std::size_t n_test = static_cast<std::size_t>(std::floor(test_fraction * double(n)));
    test_idx.assign(order.begin(), order.begin() + n_test);
    train_idx.assign(order.begin() + n_test, order.end());
}

}  // namespace agency

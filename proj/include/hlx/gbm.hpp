#pragma once

#include <vector>

#include "hlx/features.hpp"

namespace hlx {

struct GbmParams {
    int max_depth = 6;
    double lambda = 1.0;  // L2 regularization on leaf values
    double learning_rate = 0.1;
    int max_rounds = 400;
    int early_stop_rounds = 40;  // stop when dev AUC has not improved this long
    double min_child_hessian = 1e-3;
    double min_split_gain = 1e-9;
    int min_leaf_count = 1;
};

struct TreeNode {
    int feature = -1;  // < 0 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double leaf = 0.0;

    bool is_leaf() const { return feature < 0; }
};

struct RegressionTree {
    std::vector<TreeNode> nodes;

    double value(const SparseVector& x) const {
        int i = 0;
        while (!nodes[static_cast<std::size_t>(i)].is_leaf()) {
            const TreeNode& n = nodes[static_cast<std::size_t>(i)];
            i = x.get(n.feature) <= n.threshold ? n.left : n.right;
        }
        return nodes[static_cast<std::size_t>(i)].leaf;
    }
};

struct GbmModel {
    double base_score = 0.0;  // log-odds prior
    double learning_rate = 0.1;
    std::vector<RegressionTree> trees;

    double margin(const SparseVector& x) const;
    double predict_prob(const SparseVector& x) const;  // sigmoid(margin), in (0, 1)
};

struct GbmTrainResult {
    GbmModel model;
    std::vector<double> dev_auc_trace;  // one entry per boosting round
    int best_round = -1;                // round whose trees the model keeps
};

// Gradient-boosted trees under logistic loss with exact greedy splits.
// Missing sparse entries are treated as value 0. Training stops once the
// dev ROC AUC has not improved for early_stop_rounds consecutive rounds and
// the model is truncated to the best round. Fully deterministic.
GbmTrainResult train_gbm(const std::vector<SparseVector>& train_x, const std::vector<int>& train_y,
                         const std::vector<SparseVector>& dev_x, const std::vector<int>& dev_y,
                         const GbmParams& params);

}  // namespace hlx

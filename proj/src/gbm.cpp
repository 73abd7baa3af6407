#include "hlx/gbm.hpp"

#include <algorithm>
#include <cmath>

#include "hlx/common.hpp"
#include "hlx/metrics.hpp"

namespace hlx {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct ColumnEntry {
    double value;
    int row;
};

// Column-major view of the training matrix: per feature, rows sorted by
// value ascending. Built once per training run.
struct Columns {
    int n_features = 0;
    std::vector<std::vector<ColumnEntry>> cols;

    explicit Columns(const std::vector<SparseVector>& x) {
        for (const auto& v : x)
            for (const auto& [f, _] : v.entries) n_features = std::max(n_features, f + 1);
        cols.resize(static_cast<std::size_t>(n_features));
        for (int row = 0; row < static_cast<int>(x.size()); ++row)
            for (const auto& [f, value] : x[static_cast<std::size_t>(row)].entries)
                cols[static_cast<std::size_t>(f)].push_back({value, row});
        for (auto& col : cols)
            std::sort(col.begin(), col.end(), [](const ColumnEntry& a, const ColumnEntry& b) {
                return a.value != b.value ? a.value < b.value : a.row < b.row;
            });
    }
};

struct NodeStats {
    double g = 0.0;
    double h = 0.0;
    int count = 0;
};

struct SplitChoice {
    double gain = 0.0;
    int feature = -1;
    double threshold = 0.0;
};

double leaf_weight(const NodeStats& s, double lambda) { return -s.g / (s.h + lambda); }

double split_score(double g, double h, double lambda) { return g * g / (h + lambda); }

// One candidate bucket in a node's value ordering: a distinct feature value
// (or the implicit zero group) with its gradient sums.
struct Bucket {
    double value;
    double g;
    double h;
    int count;
};

void scan_buckets(const std::vector<Bucket>& buckets, const NodeStats& total, int feature,
                  const GbmParams& params, SplitChoice& best) {
    double gl = 0.0, hl = 0.0;
    int cl = 0;
    const double parent = split_score(total.g, total.h, params.lambda);
    for (std::size_t i = 0; i + 1 < buckets.size(); ++i) {
        gl += buckets[i].g;
        hl += buckets[i].h;
        cl += buckets[i].count;
        const double gr = total.g - gl;
        const double hr = total.h - hl;
        const int cr = total.count - cl;
        if (hl < params.min_child_hessian || hr < params.min_child_hessian) continue;
        if (cl < params.min_leaf_count || cr < params.min_leaf_count) continue;
        const double gain =
            split_score(gl, hl, params.lambda) + split_score(gr, hr, params.lambda) - parent;
        // Features and thresholds are scanned in ascending order, so a
        // strict improvement keeps the lowest (feature, threshold) at ties.
        if (gain > best.gain) {
            best = {gain, feature, 0.5 * (buckets[i].value + buckets[i + 1].value)};
        }
    }
}

RegressionTree grow_tree(const Columns& columns, const std::vector<SparseVector>& x,
                         const std::vector<double>& grad, const std::vector<double>& hess,
                         const GbmParams& params) {
    const int n_rows = static_cast<int>(x.size());
    RegressionTree tree;
    tree.nodes.push_back({});

    // node assignment per row; -1 once a row sits in a finished leaf
    std::vector<int> node_of_row(static_cast<std::size_t>(n_rows), 0);
    std::vector<int> level_nodes{0};
    std::vector<NodeStats> stats(1);
    for (int r = 0; r < n_rows; ++r) {
        stats[0].g += grad[static_cast<std::size_t>(r)];
        stats[0].h += hess[static_cast<std::size_t>(r)];
        stats[0].count += 1;
    }

    for (int depth = 0; depth < params.max_depth && !level_nodes.empty(); ++depth) {
        // Gather per-node sorted candidates, one feature at a time.
        std::vector<SplitChoice> best(tree.nodes.size());
        std::vector<std::vector<Bucket>> buckets(tree.nodes.size());

        for (int f = 0; f < columns.n_features; ++f) {
            for (int nid : level_nodes) buckets[static_cast<std::size_t>(nid)].clear();
            std::vector<NodeStats> present(tree.nodes.size());
            for (const ColumnEntry& e : columns.cols[static_cast<std::size_t>(f)]) {
                int nid = node_of_row[static_cast<std::size_t>(e.row)];
                if (nid < 0) continue;
                auto& bs = buckets[static_cast<std::size_t>(nid)];
                const double g = grad[static_cast<std::size_t>(e.row)];
                const double h = hess[static_cast<std::size_t>(e.row)];
                if (!bs.empty() && bs.back().value == e.value) {
                    bs.back().g += g;
                    bs.back().h += h;
                    bs.back().count += 1;
                } else {
                    bs.push_back({e.value, g, h, 1});
                }
                auto& p = present[static_cast<std::size_t>(nid)];
                p.g += g;
                p.h += h;
                p.count += 1;
            }
            for (int nid : level_nodes) {
                auto& bs = buckets[static_cast<std::size_t>(nid)];
                if (bs.empty()) continue;  // feature constant zero in this node
                const NodeStats& tot = stats[static_cast<std::size_t>(nid)];
                const NodeStats& pres = present[static_cast<std::size_t>(nid)];
                if (pres.count < tot.count) {
                    // implicit zero bucket, inserted in value order
                    Bucket zero{0.0, tot.g - pres.g, tot.h - pres.h, tot.count - pres.count};
                    auto pos = std::lower_bound(
                        bs.begin(), bs.end(), 0.0,
                        [](const Bucket& b, double v) { return b.value < v; });
                    bs.insert(pos, zero);
                }
                scan_buckets(bs, tot, f, params, best[static_cast<std::size_t>(nid)]);
            }
        }

        // Apply the chosen splits and build the next level.
        std::vector<int> next_level;
        for (int nid : level_nodes) {
            SplitChoice choice = best[static_cast<std::size_t>(nid)];
            TreeNode& node = tree.nodes[static_cast<std::size_t>(nid)];
            if (choice.feature < 0 || choice.gain <= params.min_split_gain) {
                node.leaf = leaf_weight(stats[static_cast<std::size_t>(nid)], params.lambda);
                continue;
            }
            node.feature = choice.feature;
            node.threshold = choice.threshold;
            node.left = static_cast<int>(tree.nodes.size());
            node.right = node.left + 1;
            tree.nodes.push_back({});
            tree.nodes.push_back({});
            stats.resize(tree.nodes.size());
            next_level.push_back(node.left);
            next_level.push_back(node.right);
        }
        if (next_level.empty()) break;

        for (int r = 0; r < n_rows; ++r) {
            int nid = node_of_row[static_cast<std::size_t>(r)];
            if (nid < 0) continue;
            const TreeNode& node = tree.nodes[static_cast<std::size_t>(nid)];
            if (node.is_leaf()) {
                node_of_row[static_cast<std::size_t>(r)] = -1;
                continue;
            }
            int child = x[static_cast<std::size_t>(r)].get(node.feature) <= node.threshold
                            ? node.left
                            : node.right;
            node_of_row[static_cast<std::size_t>(r)] = child;
            auto& s = stats[static_cast<std::size_t>(child)];
            s.g += grad[static_cast<std::size_t>(r)];
            s.h += hess[static_cast<std::size_t>(r)];
            s.count += 1;
        }
        level_nodes = std::move(next_level);
    }

    // depth cap: anything still open becomes a leaf
    for (int nid : level_nodes) {
        TreeNode& node = tree.nodes[static_cast<std::size_t>(nid)];
        if (node.is_leaf() && node.left < 0)
            node.leaf = leaf_weight(stats[static_cast<std::size_t>(nid)], params.lambda);
    }
    return tree;
}

}  // namespace

double GbmModel::margin(const SparseVector& x) const {
    double sum = 0.0;
    for (const auto& t : trees) sum += t.value(x);
    return base_score + learning_rate * sum;
}

double GbmModel::predict_prob(const SparseVector& x) const { return sigmoid(margin(x)); }

GbmTrainResult train_gbm(const std::vector<SparseVector>& train_x, const std::vector<int>& train_y,
                         const std::vector<SparseVector>& dev_x, const std::vector<int>& dev_y,
                         const GbmParams& params) {
    require(train_x.size() == train_y.size(), "train features/labels size mismatch");
    require(dev_x.size() == dev_y.size(), "dev features/labels size mismatch");
    require(train_x.size() >= 2, "need at least two training examples");
    const int n = static_cast<int>(train_x.size());
    int n_pos = 0;
    for (int y : train_y) n_pos += y > 0 ? 1 : 0;
    require(n_pos > 0 && n_pos < n, "training labels must contain both classes");

    bool dev_has_both = false;
    {
        int dev_pos = 0;
        for (int y : dev_y) dev_pos += y > 0 ? 1 : 0;
        dev_has_both = dev_pos > 0 && dev_pos < static_cast<int>(dev_y.size());
    }

    GbmTrainResult result;
    result.model.learning_rate = params.learning_rate;
    result.model.base_score =
        std::log(static_cast<double>(n_pos) / static_cast<double>(n - n_pos));

    Columns columns(train_x);
    std::vector<double> margin(static_cast<std::size_t>(n), result.model.base_score);
    std::vector<double> dev_margin(dev_x.size(), result.model.base_score);
    std::vector<double> grad(static_cast<std::size_t>(n));
    std::vector<double> hess(static_cast<std::size_t>(n));

    double best_auc = -1.0;
    int stale = 0;
    for (int round = 0; round < params.max_rounds; ++round) {
        for (int r = 0; r < n; ++r) {
            double p = sigmoid(margin[static_cast<std::size_t>(r)]);
            grad[static_cast<std::size_t>(r)] = p - static_cast<double>(train_y[static_cast<std::size_t>(r)]);
            hess[static_cast<std::size_t>(r)] = std::max(p * (1.0 - p), 1e-16);
        }
        RegressionTree tree = grow_tree(columns, train_x, grad, hess, params);

        for (int r = 0; r < n; ++r)
            margin[static_cast<std::size_t>(r)] +=
                params.learning_rate * tree.value(train_x[static_cast<std::size_t>(r)]);
        for (std::size_t r = 0; r < dev_x.size(); ++r)
            dev_margin[r] += params.learning_rate * tree.value(dev_x[r]);
        result.model.trees.push_back(std::move(tree));

        double auc = 0.5;
        if (dev_has_both) {
            std::vector<int> yv(dev_y.begin(), dev_y.end());
            auc = roc_auc(dev_margin, yv);
        }
        result.dev_auc_trace.push_back(auc);
        if (auc > best_auc) {
            best_auc = auc;
            result.best_round = round;
            stale = 0;
        } else if (++stale >= params.early_stop_rounds) {
            break;
        }
    }

    result.model.trees.resize(static_cast<std::size_t>(result.best_round + 1));
    return result;
}

}  // namespace hlx

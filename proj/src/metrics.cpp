#include "hlx/metrics.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

#include "hlx/common.hpp"

namespace hlx {

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    require(scores.size() == labels.size(), "scores/labels size mismatch");
    const std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (int y : labels) n_pos += y > 0 ? 1 : 0;
    const std::size_t n_neg = n - n_pos;
    require(n_pos > 0 && n_neg > 0, "roc_auc needs both classes present");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Midranks over tie groups; rank sum of the positive class gives U.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        double midrank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
        for (std::size_t k = i; k < j; ++k)
            if (labels[order[k]] > 0) pos_rank_sum += midrank;
        i = j;
    }
    double u = pos_rank_sum - 0.5 * static_cast<double>(n_pos) * static_cast<double>(n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

PrecisionRecall precision_recall_at_r(const std::vector<double>& sentence_scores,
                                      const std::vector<int>& truth, int r, bool* clamped) {
    require(sentence_scores.size() == truth.size(), "scores/truth size mismatch");
    require(r >= 1, "R must be >= 1");
    const int n = static_cast<int>(sentence_scores.size());
    require(n > 0, "empty transcript");
    if (clamped) *clamped = r > n;
    r = std::min(r, n);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double sa = sentence_scores[static_cast<std::size_t>(a)];
        double sb = sentence_scores[static_cast<std::size_t>(b)];
        return sa != sb ? sa > sb : a < b;
    });

    int total_true = 0;
    for (int y : truth) total_true += y > 0 ? 1 : 0;
    int hits = 0;
    for (int i = 0; i < r; ++i)
        if (truth[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] > 0) ++hits;

    PrecisionRecall pr;
    pr.precision = static_cast<double>(hits) / static_cast<double>(r);
    pr.recall = total_true > 0 ? static_cast<double>(hits) / static_cast<double>(total_true) : 0.0;
    return pr;
}

}  // namespace hlx

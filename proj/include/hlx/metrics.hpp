#pragma once

#include <vector>

namespace hlx {

// Mann-Whitney ROC AUC: P(score_pos > score_neg) + 0.5 * P(tie), computed
// from midranks in O(n log n). Throws when only one class is present.
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct PrecisionRecall {
    double precision = 0.0;
    double recall = 0.0;
};

// Top-R sentences by score (ties broken by earlier index) scored against
// the truth labels. R larger than the sentence count is clamped; the clamp
// is reported through *clamped when given.
PrecisionRecall precision_recall_at_r(const std::vector<double>& sentence_scores,
                                      const std::vector<int>& truth, int r,
                                      bool* clamped = nullptr);

}  // namespace hlx

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hlx/corpus.hpp"

namespace hlx {

// Normalized histogram of example word counts. Bin b covers word counts
// [b * bin_width, (b + 1) * bin_width).
struct LengthDistribution {
    int bin_width = 1;
    std::map<int, double> bins;  // bin index -> probability mass
};

LengthDistribution length_distribution(const std::vector<LabeledExample>& examples,
                                       int bin_width);
LengthDistribution length_distribution_of(const std::vector<int>& word_counts, int bin_width);

// Integrated absolute difference of the two densities. With equal bin
// widths this reduces to sum |p_b - q_b| over bins, so 0 <= D <= 2 and
// disjoint supports give exactly 2.
double ks_distance(const LengthDistribution& p, const LengthDistribution& q);

// Sequentially re-cuts each non-clip into contiguous pieces whose word
// counts are drawn from the target distribution; the final piece is
// truncated to the remaining words, so total words per source example are
// conserved and concatenating the pieces reproduces the source tokens.
// Deterministic per seed (each source example gets its own sub-stream).
std::vector<LabeledExample> redistribute(const std::vector<LabeledExample>& nonclips,
                                         const LengthDistribution& target, std::uint64_t seed);

// Mann-Whitney AUC of length-as-score with lengths_a as the positive side:
// 0.5 means the two sides are indistinguishable by length alone, and
// auc(a, b) + auc(b, a) = 1.
double length_drift_auc(const std::vector<int>& lengths_a, const std::vector<int>& lengths_b);

}  // namespace hlx

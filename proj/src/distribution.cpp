#include "hlx/distribution.hpp"

#include <algorithm>

#include "hlx/common.hpp"
#include "hlx/metrics.hpp"
#include "hlx/rng.hpp"

namespace hlx {

LengthDistribution length_distribution_of(const std::vector<int>& word_counts, int bin_width) {
    require(bin_width >= 1, "bin_width must be >= 1");
    require(!word_counts.empty(), "length_distribution needs at least one example");
    LengthDistribution dist;
    dist.bin_width = bin_width;
    for (int wc : word_counts) dist.bins[wc / bin_width] += 1.0;
    const double n = static_cast<double>(word_counts.size());
    for (auto& [bin, mass] : dist.bins) mass /= n;
    return dist;
}

LengthDistribution length_distribution(const std::vector<LabeledExample>& examples,
                                       int bin_width) {
    std::vector<int> counts;
    counts.reserve(examples.size());
    for (const auto& ex : examples) counts.push_back(ex.word_count);
    return length_distribution_of(counts, bin_width);
}

double ks_distance(const LengthDistribution& p, const LengthDistribution& q) {
    require(p.bin_width == q.bin_width, "ks_distance requires equal bin widths");
    double d = 0.0;
    auto it_p = p.bins.begin();
    auto it_q = q.bins.begin();
    while (it_p != p.bins.end() || it_q != q.bins.end()) {
        if (it_q == q.bins.end() || (it_p != p.bins.end() && it_p->first < it_q->first)) {
            d += std::abs(it_p->second);
            ++it_p;
        } else if (it_p == p.bins.end() || it_q->first < it_p->first) {
            d += std::abs(it_q->second);
            ++it_q;
        } else {
            d += std::abs(it_p->second - it_q->second);
            ++it_p;
            ++it_q;
        }
    }
    return d;
}

namespace {

// Inverse-CDF sampler over the target bins, uniform within a bin.
class LengthSampler {
public:
    explicit LengthSampler(const LengthDistribution& target) : bin_width_(target.bin_width) {
        double cum = 0.0;
        for (const auto& [bin, mass] : target.bins) {
            if (mass <= 0.0) continue;
            cum += mass;
            cdf_.emplace_back(cum, bin);
        }
        require(!cdf_.empty(), "redistribution target has zero support");
        total_ = cum;
    }

    int sample(Rng& rng) const {
        double r = rng.uniform01() * total_;
        auto it = std::lower_bound(cdf_.begin(), cdf_.end(), r,
                                   [](const auto& e, double v) { return e.first < v; });
        if (it == cdf_.end()) --it;
        int bin = it->second;
        std::int64_t lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(bin) * bin_width_);
        std::int64_t hi = static_cast<std::int64_t>(bin + 1) * bin_width_ - 1;
        if (hi < lo) hi = lo;
        return static_cast<int>(rng.uniform_int(lo, hi));
    }

private:
    int bin_width_;
    double total_ = 0.0;
    std::vector<std::pair<double, int>> cdf_;
};

}  // namespace

std::vector<LabeledExample> redistribute(const std::vector<LabeledExample>& nonclips,
                                         const LengthDistribution& target, std::uint64_t seed) {
    LengthSampler sampler(target);
    std::vector<LabeledExample> out;
    out.reserve(nonclips.size());

    for (std::size_t idx = 0; idx < nonclips.size(); ++idx) {
        const LabeledExample& src = nonclips[idx];
        if (src.word_count <= 0) {
            out.push_back(src);
            continue;
        }
        Rng rng(substream_seed(seed, "redistribute", idx));

        std::vector<int> quotas;
        int cum = 0;
        while (cum < src.word_count) {
            int len = sampler.sample(rng);
            if (cum + len >= src.word_count) {
                quotas.push_back(src.word_count - cum);
                cum = src.word_count;
            } else {
                quotas.push_back(len);
                cum += len;
            }
        }

        // Cut at word boundaries, sequentially; punctuation tokens right
        // after a cut start the next piece, and the last piece takes any
        // trailing tokens.
        std::size_t pos = 0;
        for (std::size_t qi = 0; qi < quotas.size(); ++qi) {
            TokenSequence piece;
            piece.punct_mode = src.tokens.punct_mode;
            piece.stemmed = src.tokens.stemmed;
            if (qi + 1 == quotas.size()) {
                piece.tokens.assign(src.tokens.tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                                    src.tokens.tokens.end());
                pos = src.tokens.tokens.size();
            } else {
                int words = 0;
                while (pos < src.tokens.tokens.size() && words < quotas[qi]) {
                    if (!is_punct_token(src.tokens.tokens[pos])) ++words;
                    piece.tokens.push_back(src.tokens.tokens[pos]);
                    ++pos;
                }
            }
            out.push_back(make_labeled_example(std::move(piece), src.source,
                                               src.origin_transcript, src.recorded_at));
        }
    }
    return out;
}

double length_drift_auc(const std::vector<int>& lengths_a, const std::vector<int>& lengths_b) {
    require(!lengths_a.empty() && !lengths_b.empty(), "length_drift_auc needs both sides");
    std::vector<double> scores;
    std::vector<int> labels;
    scores.reserve(lengths_a.size() + lengths_b.size());
    labels.reserve(scores.capacity());
    for (int v : lengths_a) {
        scores.push_back(static_cast<double>(v));
        labels.push_back(1);
    }
    for (int v : lengths_b) {
        scores.push_back(static_cast<double>(v));
        labels.push_back(0);
    }
    return roc_auc(scores, labels);
}

}  // namespace hlx

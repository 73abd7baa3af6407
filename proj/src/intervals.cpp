#include "hlx/intervals.hpp"

#include <algorithm>

#include "hlx/common.hpp"

namespace hlx {

std::vector<SuperClip> reduce_superclips(std::vector<Span> clips) {
    std::vector<SuperClip> out;
    if (clips.empty()) return out;
    for (const Span& c : clips) require(c.start < c.end, "clip span must satisfy start < end");
    std::sort(clips.begin(), clips.end(), [](const Span& a, const Span& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    });
    SuperClip cur{clips.front(), 1};
    for (std::size_t i = 1; i < clips.size(); ++i) {
        const Span& c = clips[i];
        if (c.start < cur.span.end) {  // shares at least one character
            cur.span.end = std::max(cur.span.end, c.end);
            cur.multiplicity += 1;
        } else {
            out.push_back(cur);
            cur = {c, 1};
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Span> excise_nonclips(std::int64_t doc_length,
                                  const std::vector<SuperClip>& superclips) {
    std::vector<Span> gaps;
    std::int64_t pos = 0;
    for (const SuperClip& sc : superclips) {
        require(sc.span.start >= pos && sc.span.end <= doc_length,
                "superclips must be sorted, non-overlapping, within the document");
        if (sc.span.start > pos) gaps.push_back({pos, sc.span.start});
        pos = sc.span.end;
    }
    if (pos < doc_length) gaps.push_back({pos, doc_length});
    return gaps;
}

double h_coverage(std::int64_t doc_length, const std::vector<SuperClip>& superclips) {
    require(doc_length > 0, "h_coverage undefined for empty document");
    std::int64_t covered = 0;
    for (const SuperClip& sc : superclips) covered += sc.span.length();
    return static_cast<double>(covered) / static_cast<double>(doc_length);
}

}  // namespace hlx

#pragma once

#include <cstdint>
#include <vector>

namespace hlx {

// Half-open character interval [start, end).
struct Span {
    std::int64_t start = 0;
    std::int64_t end = 0;

    std::int64_t length() const { return end - start; }
    bool overlaps(const Span& o) const { return start < o.end && o.start < end; }
    bool operator==(const Span& o) const = default;
};

// Maximal merged span plus the number of clips that produced it.
struct SuperClip {
    Span span;
    int multiplicity = 1;

    bool operator==(const SuperClip& o) const = default;
};

// Union of overlapping clips: output spans are the connected components of
// the character-overlap graph, sorted by start. Spans that merely touch
// (end == start) share no character and stay separate. Multiplicities sum
// to the input clip count.
std::vector<SuperClip> reduce_superclips(std::vector<Span> clips);

// Maximal gaps left in [0, doc_length) after removing the superclips.
// Together with the superclips the gaps tile the document.
std::vector<Span> excise_nonclips(std::int64_t doc_length,
                                  const std::vector<SuperClip>& superclips);

// Fraction of the document covered by superclips. doc_length must be > 0.
double h_coverage(std::int64_t doc_length, const std::vector<SuperClip>& superclips);

}  // namespace hlx

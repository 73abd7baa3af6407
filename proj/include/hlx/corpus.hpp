#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hlx/intervals.hpp"
#include "hlx/text.hpp"

namespace hlx {

struct Transcript {
    std::string id;
    std::string text;
    std::int64_t recorded_at = 0;  // epoch seconds, UTC
    std::vector<Span> clips;       // character offsets, as annotated
    std::vector<Sentence> sentences;
};

enum class ExampleSource { clip, nonclip };

struct LabeledExample {
    TokenSequence tokens;
    int label = 0;  // 1 iff source == clip
    ExampleSource source = ExampleSource::nonclip;
    int word_count = 0;
    std::string origin_transcript;
    std::int64_t recorded_at = 0;
};

LabeledExample make_labeled_example(TokenSequence tokens, ExampleSource source,
                                    std::string origin, std::int64_t recorded_at);

struct ParseStats {
    std::int64_t records = 0;
    std::int64_t skipped = 0;
    std::int64_t clamped_spans = 0;
    std::int64_t dropped_spans = 0;
    std::vector<std::string> warnings;
};

struct ParseResult {
    std::vector<Transcript> transcripts;
    ParseStats stats;
};

// Line-delimited JSON, one transcript per line:
//   {"id": "...", "text": "...", "recorded_at": "2017-03-01T00:00:00Z",
//    "clips": [{"start_char": 0, "end_char": 42}, ...]}
// Malformed lines are skipped and counted; clip spans are clamped to the
// text bounds (spans that become empty are dropped). Sentences are computed.
ParseResult parse_corpus(std::istream& in);

void write_corpus(std::ostream& out, const std::vector<Transcript>& transcripts);

struct SynthParams {
    int n_transcripts = 100;
    int min_sentences = 20;
    int max_sentences = 60;
    std::vector<std::string> highlight_vocab;
    std::vector<std::string> background_vocab;
    double planted_h_coverage = 0.5;
    int min_words_per_sentence = 8;
    int max_words_per_sentence = 14;
    std::string start_date = "2016-01-01";
    int day_step = 3;  // spacing of recorded_at across transcripts
};

// Deterministic pseudo-vocabularies for when the caller does not supply
// explicit word lists; the two sets are disjoint by construction.
std::vector<std::string> default_highlight_vocab(int size);
std::vector<std::string> default_background_vocab(int size);

// Plants highlight sentence runs drawn from highlight_vocab and records
// them as clip spans. Identical seeds yield byte-identical corpora.
std::vector<Transcript> generate_synthetic_corpus(std::uint64_t seed, const SynthParams& params);

}  // namespace hlx

#include "hlx/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "hlx/common.hpp"
#include "hlx/rng.hpp"
#include "hlx/timeutil.hpp"

namespace hlx {

using nlohmann::json;
using nlohmann::ordered_json;

LabeledExample make_labeled_example(TokenSequence tokens, ExampleSource source,
                                    std::string origin, std::int64_t recorded_at) {
    LabeledExample ex;
    ex.word_count = word_count(tokens);
    ex.tokens = std::move(tokens);
    ex.source = source;
    ex.label = source == ExampleSource::clip ? 1 : 0;
    ex.origin_transcript = std::move(origin);
    ex.recorded_at = recorded_at;
    return ex;
}

ParseResult parse_corpus(std::istream& in) {
    ParseResult result;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        result.stats.records += 1;
        json rec = json::parse(line, nullptr, false);
        auto skip = [&](const std::string& why) {
            result.stats.skipped += 1;
            result.stats.warnings.push_back("line " + std::to_string(line_no) + ": " + why);
        };
        if (rec.is_discarded()) {
            skip("malformed JSON");
            continue;
        }
        if (!rec.is_object() || !rec.contains("id") || !rec["id"].is_string() ||
            !rec.contains("text") || !rec["text"].is_string() || !rec.contains("recorded_at") ||
            !rec["recorded_at"].is_string()) {
            skip("missing or mistyped id/text/recorded_at");
            continue;
        }
        Transcript t;
        t.id = rec["id"].get<std::string>();
        t.text = rec["text"].get<std::string>();
        try {
            t.recorded_at = parse_iso8601(rec["recorded_at"].get<std::string>());
        } catch (const Error& e) {
            skip(e.what());
            continue;
        }
        const std::int64_t len = static_cast<std::int64_t>(t.text.size());
        if (rec.contains("clips")) {
            if (!rec["clips"].is_array()) {
                skip("clips is not an array");
                continue;
            }
            for (const auto& c : rec["clips"]) {
                if (!c.is_object() || !c.contains("start_char") || !c.contains("end_char") ||
                    !c["start_char"].is_number_integer() || !c["end_char"].is_number_integer()) {
                    result.stats.dropped_spans += 1;
                    result.stats.warnings.push_back("line " + std::to_string(line_no) +
                                                    ": mistyped clip span dropped");
                    continue;
                }
                Span s{c["start_char"].get<std::int64_t>(), c["end_char"].get<std::int64_t>()};
                Span clamped{std::clamp<std::int64_t>(s.start, 0, len),
                             std::clamp<std::int64_t>(s.end, 0, len)};
                if (clamped != s) {
                    result.stats.clamped_spans += 1;
                    result.stats.warnings.push_back("line " + std::to_string(line_no) +
                                                    ": clip span clamped to text bounds");
                }
                if (clamped.start < clamped.end) {
                    t.clips.push_back(clamped);
                } else {
                    result.stats.dropped_spans += 1;
                }
            }
        }
        t.sentences = split_sentences(t.text);
        result.transcripts.push_back(std::move(t));
    }
    return result;
}

void write_corpus(std::ostream& out, const std::vector<Transcript>& transcripts) {
    for (const auto& t : transcripts) {
        ordered_json rec;
        rec["id"] = t.id;
        rec["text"] = t.text;
        rec["recorded_at"] = format_iso8601(t.recorded_at);
        ordered_json clips = ordered_json::array();
        for (const auto& c : t.clips) clips.push_back({{"start_char", c.start}, {"end_char", c.end}});
        rec["clips"] = std::move(clips);
        out << rec.dump() << '\n';
    }
}

namespace {

std::vector<std::string> pseudo_vocab(const char* const* roots, int n_roots,
                                      const char* const* suffixes, int n_suffixes, int size) {
    std::vector<std::string> words;
    words.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        std::string w = roots[i % n_roots];
        w += suffixes[(i / n_roots) % n_suffixes];
        if (i >= n_roots * n_suffixes) w += std::to_string(i / (n_roots * n_suffixes));
        words.push_back(std::move(w));
    }
    return words;
}

const char* const kHighlightRoots[] = {"bright", "vivid", "spark", "glow",  "shine", "core",
                                       "pivot",  "focus", "drive", "value", "moment", "insight"};
const char* const kHighlightSuffixes[] = {"ful", "ing", "ly", "est", "ment", "side"};
const char* const kBackgroundRoots[] = {"murmur", "filler", "routine", "plain",  "common",
                                        "gray",   "noise",  "drift",   "padding", "casual",
                                        "basic",  "steady", "neutral", "bland"};
const char* const kBackgroundSuffixes[] = {"ish", "ness", "able", "ward", "some", "like"};

const std::vector<std::string>& function_words() {
    static const std::vector<std::string> words = {"the", "and", "i",  "it",   "to",
                                                   "we",  "of",  "a",  "in",   "that",
                                                   "was", "you", "so", "they", "this"};
    return words;
}

}  // namespace

std::vector<std::string> default_highlight_vocab(int size) {
    return pseudo_vocab(kHighlightRoots, 12, kHighlightSuffixes, 6, size);
}

std::vector<std::string> default_background_vocab(int size) {
    return pseudo_vocab(kBackgroundRoots, 14, kBackgroundSuffixes, 6, size);
}

std::vector<Transcript> generate_synthetic_corpus(std::uint64_t seed, const SynthParams& params) {
    require(params.planted_h_coverage >= 0.0 && params.planted_h_coverage <= 1.0,
            "planted_h_coverage must lie in [0, 1]");
    require(params.n_transcripts >= 0, "n_transcripts must be non-negative");
    require(params.min_sentences >= 1 && params.min_sentences <= params.max_sentences,
            "invalid sentence_count_range");
    require(params.min_words_per_sentence >= 1 &&
                params.min_words_per_sentence <= params.max_words_per_sentence,
            "invalid words_per_sentence range");
    const auto& hv = params.highlight_vocab;
    const auto& bv = params.background_vocab;
    require(!hv.empty() && !bv.empty(), "vocabularies must be non-empty");
    {
        std::unordered_set<std::string> hset(hv.begin(), hv.end());
        std::size_t shared = 0;
        for (const auto& w : bv)
            if (hset.count(w)) ++shared;
        require(2 * shared <= std::min(hv.size(), bv.size()),
                "highlight and background vocabularies must be disjoint in at least "
                "50% of their terms");
    }

    const std::int64_t t0 = parse_iso8601(params.start_date);
    std::vector<Transcript> corpus;
    corpus.reserve(static_cast<std::size_t>(params.n_transcripts));

    for (int doc = 0; doc < params.n_transcripts; ++doc) {
        Rng rng(substream_seed(seed, "synth", static_cast<std::uint64_t>(doc)));
        const int n_sent =
            static_cast<int>(rng.uniform_int(params.min_sentences, params.max_sentences));

        // Choose which sentences are highlights: short runs scattered until
        // the planted coverage target is met.
        std::vector<bool> is_highlight(static_cast<std::size_t>(n_sent), false);
        int want = static_cast<int>(params.planted_h_coverage * n_sent + 0.5);
        if (params.planted_h_coverage >= 1.0) want = n_sent;
        int placed = 0;
        int misses = 0;
        while (placed < want) {
            int run = static_cast<int>(rng.uniform_int(1, 3));
            run = std::min(run, want - placed);
            int start = static_cast<int>(rng.uniform_int(0, n_sent - 1));
            bool free = start + run <= n_sent;
            for (int s = start; free && s < start + run; ++s)
                if (is_highlight[static_cast<std::size_t>(s)]) free = false;
            if (free) {
                for (int s = start; s < start + run; ++s)
                    is_highlight[static_cast<std::size_t>(s)] = true;
                placed += run;
                misses = 0;
            } else if (++misses > 64) {
                // dense boards: fill the first free slots deterministically
                for (int s = 0; s < n_sent && placed < want; ++s) {
                    if (!is_highlight[static_cast<std::size_t>(s)]) {
                        is_highlight[static_cast<std::size_t>(s)] = true;
                        ++placed;
                    }
                }
            }
        }

        Transcript t;
        t.id = "synth-" + std::to_string(100000 + doc).substr(1);
        t.recorded_at = t0 + static_cast<std::int64_t>(doc) * params.day_step * 86400;

        std::vector<Span> sentence_spans;
        sentence_spans.reserve(static_cast<std::size_t>(n_sent));
        for (int s = 0; s < n_sent; ++s) {
            const bool hl = is_highlight[static_cast<std::size_t>(s)];
            const auto& vocab = hl ? hv : bv;
            const int n_words = static_cast<int>(
                rng.uniform_int(params.min_words_per_sentence, params.max_words_per_sentence));
            std::int64_t start = static_cast<std::int64_t>(t.text.size());
            for (int w = 0; w < n_words; ++w) {
                std::string word;
                if (rng.uniform01() < 0.15) {
                    const auto& fw = function_words();
                    word = fw[static_cast<std::size_t>(rng.next_below(fw.size()))];
                } else {
                    word = vocab[static_cast<std::size_t>(rng.next_below(vocab.size()))];
                }
                if (w == 0 && !word.empty())
                    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
                t.text += word;
                if (w + 1 < n_words) {
                    if (rng.uniform01() < 0.12) t.text += ',';
                    t.text += ' ';
                }
            }
            double r = rng.uniform01();
            double bang = hl ? 0.30 : 0.10;
            t.text += r < bang ? '!' : (r < bang + 0.15 ? '?' : '.');
            if (s + 1 < n_sent) t.text += ' ';
            sentence_spans.push_back({start, static_cast<std::int64_t>(t.text.size())});
        }

        // Record each highlight run as one clip; occasionally add a second
        // overlapping clip so superclip reduction has real work to do.
        int s = 0;
        while (s < n_sent) {
            if (!is_highlight[static_cast<std::size_t>(s)]) {
                ++s;
                continue;
            }
            int run_start = s;
            while (s < n_sent && is_highlight[static_cast<std::size_t>(s)]) ++s;
            Span clip{sentence_spans[static_cast<std::size_t>(run_start)].start,
                      sentence_spans[static_cast<std::size_t>(s - 1)].end};
            t.clips.push_back(clip);
            if (s - run_start >= 2 && rng.uniform01() < 0.2) {
                // duplicate covering a sub-range of the run
                t.clips.push_back({sentence_spans[static_cast<std::size_t>(run_start)].start,
                                   sentence_spans[static_cast<std::size_t>(run_start + 1)].end});
            }
        }
        t.sentences = split_sentences(t.text);
        corpus.push_back(std::move(t));
    }
    return corpus;
}

}  // namespace hlx

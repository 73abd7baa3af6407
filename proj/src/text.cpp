#include "hlx/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "hlx/common.hpp"

namespace hlx {

namespace {

bool is_ascii_punct(unsigned char c) { return std::ispunct(c) != 0; }
bool is_word_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }
bool is_space(unsigned char c) { return std::isspace(c) != 0; }

}  // namespace

PunctMode parse_punct_mode(std::string_view name) {
    if (name == "keep") return PunctMode::keep;
    if (name == "strip") return PunctMode::strip;
    throw Error("unknown punct mode '" + std::string(name) + "' (expected keep|strip)");
}

std::string punct_mode_name(PunctMode m) {
    return m == PunctMode::keep ? "keep" : "strip";
}

bool is_punct_token(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(),
                       [](char c) { return is_ascii_punct(static_cast<unsigned char>(c)); });
}

TokenSequence tokenize(std::string_view text, PunctMode mode) {
    TokenSequence seq;
    seq.punct_mode = mode;
    std::string word;
    auto flush = [&] {
        if (!word.empty()) {
            seq.tokens.push_back(word);
            word.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_char(c)) {
            word.push_back(static_cast<char>(std::tolower(c)));
        } else if (c == '\'' && !word.empty() && i + 1 < text.size() &&
                   is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            word.push_back('\'');  // internal apostrophe: don't
        } else {
            flush();
            if (!is_space(c) && mode == PunctMode::keep)
                seq.tokens.push_back(std::string(1, static_cast<char>(c)));
        }
    }
    flush();
    return seq;
}

int word_count(const TokenSequence& seq) {
    int n = 0;
    for (const auto& t : seq.tokens)
        if (!is_punct_token(t)) ++n;
    return n;
}

namespace {

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> abbrevs = {
        "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc",
        "e.g", "i.e", "eg", "ie", "fig", "eq", "al", "inc", "ltd", "co",
        "approx"};
    return abbrevs;
}

// Lowercased word immediately before position pos (exclusive), including
// internal dots so "e.g." guards on "e.g".
std::string word_before(std::string_view text, std::size_t pos) {
    std::size_t end = pos;
    std::size_t begin = end;
    while (begin > 0) {
        unsigned char c = static_cast<unsigned char>(text[begin - 1]);
        if (is_word_char(c) || (c == '.' && begin - 1 > 0 && begin != end)) {
            --begin;
        } else {
            break;
        }
    }
    std::string w;
    for (std::size_t i = begin; i < end; ++i)
        w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
    return w;
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view text) {
    std::vector<Sentence> sentences;
    if (text.empty()) return sentences;

    std::vector<std::int64_t> breaks;  // positions where a new sentence starts
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '.' || c == '!' || c == '?') {
            std::size_t run_start = i;
            while (i < text.size() && (text[i] == '.' || text[i] == '!' || text[i] == '?')) ++i;
            bool at_end = i == text.size();
            bool followed_by_space = !at_end && is_space(static_cast<unsigned char>(text[i]));
            bool guarded = text[run_start] == '.' && i - run_start == 1 &&
                           abbreviations().count(word_before(text, run_start)) > 0;
            if (followed_by_space && !guarded) {
                // The new sentence starts at the next non-whitespace char;
                // trailing whitespace stays with the finished sentence.
                std::size_t next = i;
                while (next < text.size() && is_space(static_cast<unsigned char>(text[next])))
                    ++next;
                if (next < text.size()) breaks.push_back(static_cast<std::int64_t>(next));
                i = next;
            }
        } else {
            ++i;
        }
    }

    std::int64_t start = 0;
    int index = 0;
    for (std::int64_t b : breaks) {
        sentences.push_back({index++, {start, b}});
        start = b;
    }
    sentences.push_back({index, {start, static_cast<std::int64_t>(text.size())}});
    return sentences;
}

const std::vector<std::string>& stopword_list() {
    // Snowball-style English list.
    static const std::vector<std::string> words = {
        "i",       "me",      "my",      "myself",  "we",       "our",     "ours",
        "ourselves", "you",   "your",    "yours",   "yourself", "yourselves", "he",
        "him",     "his",     "himself", "she",     "her",      "hers",    "herself",
        "it",      "its",     "itself",  "they",    "them",     "their",   "theirs",
        "themselves", "what", "which",   "who",     "whom",     "this",    "that",
        "these",   "those",   "am",      "is",      "are",      "was",     "were",
        "be",      "been",    "being",   "have",    "has",      "had",     "having",
        "do",      "does",    "did",     "doing",   "a",        "an",      "the",
        "and",     "but",     "if",      "or",      "because",  "as",      "until",
        "while",   "of",      "at",      "by",      "for",      "with",    "about",
        "against", "between", "into",    "through", "during",   "before",  "after",
        "above",   "below",   "to",      "from",    "up",       "down",    "in",
        "out",     "on",      "off",     "over",    "under",    "again",   "further",
        "then",    "once",    "here",    "there",   "when",     "where",   "why",
        "how",     "all",     "any",     "both",    "each",     "few",     "more",
        "most",    "other",   "some",    "such",    "no",       "nor",     "not",
        "only",    "own",     "same",    "so",      "than",     "too",     "very",
        "s",       "t",       "can",     "will",    "just",     "don",     "should",
        "now"};
    return words;
}

bool is_stopword(std::string_view token) {
    static const std::unordered_set<std::string> set(stopword_list().begin(),
                                                     stopword_list().end());
    return set.count(std::string(token)) > 0;
}

TokenSequence remove_stopwords(const TokenSequence& seq) {
    TokenSequence out;
    out.punct_mode = seq.punct_mode;
    out.stemmed = seq.stemmed;
    out.tokens.reserve(seq.tokens.size());
    for (const auto& t : seq.tokens)
        if (is_punct_token(t) || !is_stopword(t)) out.tokens.push_back(t);
    return out;
}

}  // namespace hlx

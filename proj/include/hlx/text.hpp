#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hlx/intervals.hpp"

namespace hlx {

enum class PunctMode { keep, strip };

PunctMode parse_punct_mode(std::string_view name);
std::string punct_mode_name(PunctMode m);

// Ordered token list plus the preprocessing it went through.
struct TokenSequence {
    std::vector<std::string> tokens;
    PunctMode punct_mode = PunctMode::keep;
    bool stemmed = false;
};

struct Sentence {
    int index = 0;
    Span span;  // character interval in the owning transcript
};

// True when every character of the token is ASCII punctuation.
bool is_punct_token(std::string_view token);

// Lowercases and splits into word and punctuation tokens. Words are runs of
// alphanumeric characters (non-ASCII bytes count as letters, apostrophes
// between letters stay inside the word); in keep mode every punctuation mark
// becomes its own token, in strip mode punctuation is dropped.
TokenSequence tokenize(std::string_view text, PunctMode mode);

// Number of word (non-punctuation) tokens.
int word_count(const TokenSequence& seq);

// Rule-based segmentation: a sentence ends at a run of . ! ? followed by
// whitespace, unless the word before a '.' is a known abbreviation. Spans
// tile the text exactly (inter-sentence whitespace attaches to the sentence
// on its left), so concatenating all spans reproduces the input.
std::vector<Sentence> split_sentences(std::string_view text);

// Fixed English stop-word list, lowercase.
const std::vector<std::string>& stopword_list();
bool is_stopword(std::string_view token);

// Drops stop words; punctuation tokens are kept as-is.
TokenSequence remove_stopwords(const TokenSequence& seq);

}  // namespace hlx

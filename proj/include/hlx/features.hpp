#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hlx/text.hpp"

namespace hlx {

// Sparse feature vector; zero-valued entries are never stored.
struct SparseVector {
    std::map<int, double> entries;

    void add(int index, double value) {
        if (value == 0.0) return;
        auto [it, inserted] = entries.emplace(index, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0.0) entries.erase(it);
        }
    }

    double get(int index) const {
        auto it = entries.find(index);
        return it == entries.end() ? 0.0 : it->second;
    }
};

struct Vocabulary {
    std::unordered_map<std::string, int> terms;  // joined n-gram -> feature index
    std::vector<std::string> term_names;         // feature index -> n-gram
    std::vector<std::int64_t> document_frequency;
    std::int64_t corpus_doc_count = 0;
    int ngram_min = 1;
    int ngram_max = 1;

    std::size_t size() const { return term_names.size(); }
};

// Tokens of an n-gram joined with single spaces.
std::string join_ngram(const std::vector<std::string>& tokens, std::size_t begin, int n);

// Most frequent max_terms n-grams by total corpus count, ties broken
// lexicographically; feature indices follow that ranking. Punctuation
// tokens participate like any other token (keep-mode corpora may rank them).
Vocabulary build_vocabulary(const std::vector<TokenSequence>& corpus, std::size_t max_terms,
                            int ngram_min, int ngram_max);

enum class WeightScheme { count, tfidf };

// Smoothed inverse document frequency: log((1 + D) / (1 + df)) + 1.
double idf(const Vocabulary& vocab, int index);

// count: raw n-gram counts over the vocabulary. tfidf: (count / token
// count) * idf. Out-of-vocabulary n-grams are dropped.
SparseVector vectorize(const TokenSequence& tokens, const Vocabulary& vocab, WeightScheme scheme);

struct EmbeddingTable {
    int dimension = 0;
    std::vector<std::string> words;            // file order, preserved
    std::vector<std::vector<double>> vectors;  // parallel to words
    std::unordered_map<std::string, int> index;
    std::vector<double> unk_vector;  // component-wise mean of all vectors

    const std::vector<double>* find(const std::string& word) const {
        auto it = index.find(word);
        return it == index.end() ? nullptr : &vectors[static_cast<std::size_t>(it->second)];
    }
};

EmbeddingTable make_embedding_table(std::vector<std::string> words,
                                    std::vector<std::vector<double>> vectors);

// Text format: one entry per line, "word v1 v2 ... vK". Throws with the
// offending line number on dimension mismatches; empty input is an error.
EmbeddingTable load_embedding_text(std::istream& in);

// Binary cache, magic "HLE1": little-endian dimension header followed by
// length-prefixed words with raw IEEE-754 vectors. Round-trips bit-exactly.
void save_embedding_cache(std::ostream& out, const EmbeddingTable& table);
EmbeddingTable load_embedding_cache(std::istream& in);

enum class EmbedScheme { mean, tfidf };

// Weighted sum of word vectors: sum_i c_i * tf_i * v_i with tf_i the word's
// count over the document token count. mean sets c_i = 1; tfidf takes c_i
// from the vocabulary (required) and gives words outside it the maximum idf.
// Words missing from the table contribute through the unk vector. An empty
// document yields the zero vector.
std::vector<double> embed_document(const TokenSequence& tokens, const EmbeddingTable& table,
                                   EmbedScheme scheme, const Vocabulary* vocab = nullptr);

}  // namespace hlx

#include "hlx/features.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "hlx/binio.hpp"
#include "hlx/common.hpp"

namespace hlx {

std::string join_ngram(const std::vector<std::string>& tokens, std::size_t begin, int n) {
    std::string out = tokens[begin];
    for (int i = 1; i < n; ++i) {
        out += ' ';
        out += tokens[begin + static_cast<std::size_t>(i)];
    }
    return out;
}

Vocabulary build_vocabulary(const std::vector<TokenSequence>& corpus, std::size_t max_terms,
                            int ngram_min, int ngram_max) {
    require(!corpus.empty(), "build_vocabulary needs a non-empty corpus");
    require(ngram_min >= 1 && ngram_min <= ngram_max, "invalid n-gram range");
    require(max_terms >= 1, "max_terms must be >= 1");

    std::unordered_map<std::string, std::int64_t> counts;
    std::unordered_map<std::string, std::int64_t> doc_freq;
    std::unordered_set<std::string> seen_in_doc;
    for (const auto& doc : corpus) {
        seen_in_doc.clear();
        for (int n = ngram_min; n <= ngram_max; ++n) {
            if (doc.tokens.size() < static_cast<std::size_t>(n)) continue;
            for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= doc.tokens.size(); ++i) {
                std::string term = join_ngram(doc.tokens, i, n);
                counts[term] += 1;
                if (seen_in_doc.insert(term).second) doc_freq[term] += 1;
            }
        }
    }

    std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    if (ranked.size() > max_terms) ranked.resize(max_terms);

    Vocabulary vocab;
    vocab.ngram_min = ngram_min;
    vocab.ngram_max = ngram_max;
    vocab.corpus_doc_count = static_cast<std::int64_t>(corpus.size());
    vocab.term_names.reserve(ranked.size());
    vocab.document_frequency.reserve(ranked.size());
    for (auto& [term, count] : ranked) {
        int index = static_cast<int>(vocab.term_names.size());
        vocab.terms.emplace(term, index);
        vocab.document_frequency.push_back(doc_freq[term]);
        vocab.term_names.push_back(std::move(term));
    }
    return vocab;
}

double idf(const Vocabulary& vocab, int index) {
    double df = static_cast<double>(vocab.document_frequency[static_cast<std::size_t>(index)]);
    return std::log((1.0 + static_cast<double>(vocab.corpus_doc_count)) / (1.0 + df)) + 1.0;
}

SparseVector vectorize(const TokenSequence& tokens, const Vocabulary& vocab,
                       WeightScheme scheme) {
    SparseVector vec;
    if (tokens.tokens.empty()) return vec;
    for (int n = vocab.ngram_min; n <= vocab.ngram_max; ++n) {
        if (tokens.tokens.size() < static_cast<std::size_t>(n)) continue;
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.tokens.size(); ++i) {
            auto it = vocab.terms.find(join_ngram(tokens.tokens, i, n));
            if (it != vocab.terms.end()) vec.add(it->second, 1.0);
        }
    }
    if (scheme == WeightScheme::tfidf) {
        const double doc_len = static_cast<double>(tokens.tokens.size());
        for (auto& [index, value] : vec.entries) value = value / doc_len * idf(vocab, index);
    }
    return vec;
}

EmbeddingTable make_embedding_table(std::vector<std::string> words,
                                    std::vector<std::vector<double>> vectors) {
    require(words.size() == vectors.size(), "words/vectors size mismatch");
    require(!words.empty(), "embedding table must not be empty");
    EmbeddingTable table;
    table.dimension = static_cast<int>(vectors.front().size());
    require(table.dimension > 0, "embedding dimension must be positive");
    table.words = std::move(words);
    table.vectors = std::move(vectors);
    table.unk_vector.assign(static_cast<std::size_t>(table.dimension), 0.0);
    for (std::size_t i = 0; i < table.words.size(); ++i) {
        require(table.vectors[i].size() == static_cast<std::size_t>(table.dimension),
                "inconsistent embedding dimensions");
        bool fresh = table.index.emplace(table.words[i], static_cast<int>(i)).second;
        require(fresh, "duplicate word in embedding table: " + table.words[i]);
        for (int d = 0; d < table.dimension; ++d)
            table.unk_vector[static_cast<std::size_t>(d)] +=
                table.vectors[i][static_cast<std::size_t>(d)];
    }
    for (double& v : table.unk_vector) v /= static_cast<double>(table.words.size());
    return table;
}

EmbeddingTable load_embedding_text(std::istream& in) {
    std::vector<std::string> words;
    std::vector<std::vector<double>> vectors;
    std::string line;
    std::int64_t line_no = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string word;
        fields >> word;
        std::vector<double> vec;
        double v;
        while (fields >> v) vec.push_back(v);
        require(!word.empty() && !vec.empty(),
                "embedding line " + std::to_string(line_no) + ": malformed entry");
        if (dim == 0) dim = vec.size();
        require(vec.size() == dim, "embedding line " + std::to_string(line_no) +
                                       ": expected dimension " + std::to_string(dim) + ", got " +
                                       std::to_string(vec.size()));
        words.push_back(std::move(word));
        vectors.push_back(std::move(vec));
    }
    require(!words.empty(), "embedding file contains no entries");
    return make_embedding_table(std::move(words), std::move(vectors));
}

void save_embedding_cache(std::ostream& out, const EmbeddingTable& table) {
    BinWriter w(out);
    w.magic("HLE1");
    w.u32(static_cast<std::uint32_t>(table.dimension));
    w.u64(table.words.size());
    for (std::size_t i = 0; i < table.words.size(); ++i) {
        w.str(table.words[i]);
        for (double v : table.vectors[i]) w.f64(v);
    }
}

EmbeddingTable load_embedding_cache(std::istream& in) {
    BinReader r(in);
    r.expect_magic("HLE1");
    const int dim = static_cast<int>(r.u32());
    require(dim > 0, "embedding cache: bad dimension");
    const std::uint64_t count = r.u64();
    std::vector<std::string> words;
    std::vector<std::vector<double>> vectors;
    words.reserve(count);
    vectors.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        words.push_back(r.str());
        std::vector<double> vec(static_cast<std::size_t>(dim));
        for (double& v : vec) v = r.f64();
        vectors.push_back(std::move(vec));
    }
    return make_embedding_table(std::move(words), std::move(vectors));
}

std::vector<double> embed_document(const TokenSequence& tokens, const EmbeddingTable& table,
                                   EmbedScheme scheme, const Vocabulary* vocab) {
    require(scheme == EmbedScheme::mean || vocab != nullptr,
            "tfidf embedding scheme requires a vocabulary");
    std::vector<double> doc(static_cast<std::size_t>(table.dimension), 0.0);
    if (tokens.tokens.empty()) return doc;

    double max_idf = 1.0;
    if (scheme == EmbedScheme::tfidf) {
        for (std::size_t i = 0; i < vocab->size(); ++i)
            max_idf = std::max(max_idf, idf(*vocab, static_cast<int>(i)));
    }

    std::unordered_map<std::string, int> counts;
    for (const auto& t : tokens.tokens) counts[t] += 1;
    const double n_total = static_cast<double>(tokens.tokens.size());

    // Deterministic accumulation order: first occurrence order in the doc.
    std::unordered_set<std::string> done;
    for (const auto& t : tokens.tokens) {
        if (!done.insert(t).second) continue;
        const double tf = static_cast<double>(counts[t]) / n_total;
        double c = 1.0;
        if (scheme == EmbedScheme::tfidf) {
            auto it = vocab->terms.find(t);
            c = it != vocab->terms.end() ? idf(*vocab, it->second) : max_idf;
        }
        const std::vector<double>* vec = table.find(t);
        if (!vec) vec = &table.unk_vector;
        for (int d = 0; d < table.dimension; ++d)
            doc[static_cast<std::size_t>(d)] += c * tf * (*vec)[static_cast<std::size_t>(d)];
    }
    return doc;
}

}  // namespace hlx

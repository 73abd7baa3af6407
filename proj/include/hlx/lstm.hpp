#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hlx/corpus.hpp"
#include "hlx/features.hpp"

namespace hlx {

struct LstmConfig {
    int hidden_size = 32;
    bool attention = false;
    bool bidirectional = false;
    int max_sequence = 400;  // tokens beyond this are truncated
    int embedding_dim = 16;  // trainable mode; pretrained tables carry their own
    int vocab_cap = 50000;   // trainable-mode vocabulary limit
    double learning_rate = 0.001;
    int batch_size = 128;
    int early_stop_epochs = 2;  // stop after this many non-improving epochs
    int max_epochs = 30;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t seed = 1;
};

// Byte offsets of every tensor inside the flat parameter vector. Gate
// order: input, forget, output, candidate.
struct LstmLayout {
    int hidden = 0;
    int embed = 0;
    int state = 0;  // hidden * (bidirectional ? 2 : 1)
    int directions = 1;
    bool attention = false;
    bool trainable_embeddings = false;
    int vocab_rows = 0;

    std::ptrdiff_t w[2][4] = {};  // input weights, hidden x embed
    std::ptrdiff_t r[2][4] = {};  // recurrent weights, hidden x hidden
    std::ptrdiff_t b[2][4] = {};  // biases, hidden
    std::ptrdiff_t attn_w = 0;    // hidden x state
    std::ptrdiff_t attn_b = 0;    // hidden
    std::ptrdiff_t attn_ctx = 0;  // hidden, the learned context vector
    std::ptrdiff_t out_w = 0;     // 2 x state
    std::ptrdiff_t out_b = 0;     // 2
    std::ptrdiff_t embeddings = 0;  // vocab_rows x embed (trainable mode)
    std::ptrdiff_t total = 0;

    static LstmLayout make(const LstmConfig& config, int embed_dim, int vocab_rows,
                           bool trainable_embeddings);
};

struct LstmForwardResult {
    double prob = 0.5;              // probability of the highlight class
    std::vector<double> attention;  // per real token; empty for non-attention variants
};

struct LstmModel {
    LstmConfig config;
    bool pretrained_embeddings = false;
    std::vector<std::string> vocab_words;  // embedding row -> word; row 0 is <unk> when trainable
    std::unordered_map<std::string, int> vocab_index;
    Eigen::MatrixXd frozen_embeddings;  // pretrained mode: rows + trailing unk row
    Eigen::VectorXd params;
    bool trained = false;

    int embed_dim() const;
    int unk_row() const;
    LstmLayout layout() const;

    // Embedding row per token, truncated to config.max_sequence.
    std::vector<int> token_ids(const TokenSequence& tokens) const;

    // Throws on an empty sequence. Attention weights cover the real (non
    // padded) positions and sum to 1.
    LstmForwardResult forward(const TokenSequence& tokens) const;
    LstmForwardResult forward_ids(const std::vector<int>& ids) const;
};

// Fresh model with seeded uniform(-1/sqrt(hidden), +1/sqrt(hidden)) weights.
// When table is null the embedding matrix is trainable and its vocabulary is
// built from the training examples (most frequent first, row 0 = <unk>).
LstmModel init_lstm(const LstmConfig& config, const std::vector<LabeledExample>& train,
                    const EmbeddingTable* table);

// Mean cross-entropy of the batch under the current parameters.
double lstm_batch_loss(const LstmModel& model, const std::vector<std::vector<int>>& ids,
                       const std::vector<int>& labels);

// Analytic gradient of lstm_batch_loss with respect to every parameter.
Eigen::VectorXd lstm_batch_gradient(const LstmModel& model,
                                    const std::vector<std::vector<int>>& ids,
                                    const std::vector<int>& labels);

struct LstmTrainResult {
    LstmModel model;
    std::vector<double> dev_auc_trace;    // per epoch
    std::vector<double> train_loss_trace;  // per epoch, mean batch loss
    int best_epoch = -1;                  // 0-based index into the traces
};

// Mini-batch ADAM over binary cross-entropy with per-epoch dev ROC AUC and
// early stopping; the returned model carries the best epoch's parameters.
// Deterministic per config.seed. Throws if the loss turns non-finite,
// naming the epoch and batch.
LstmTrainResult train_lstm(const std::vector<LabeledExample>& train,
                           const std::vector<LabeledExample>& dev, const LstmConfig& config,
                           const EmbeddingTable* table = nullptr);

}  // namespace hlx

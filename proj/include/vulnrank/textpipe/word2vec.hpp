#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "vulnrank/textpipe/config.hpp"
#include "vulnrank/textpipe/sequence.hpp"
#include "vulnrank/util/mat.hpp"

namespace vulnrank::textpipe {

// Token -> k-dimensional vector map. Row 0 is "<pad>" and stays all-zero;
// row 1 is "<unk>" and also covers out-of-vocabulary lookups.
struct EmbeddingTable {
    static constexpr int kPadRow = 0;
    static constexpr int kUnkRow = 1;

    std::unordered_map<std::string, int> vocab;
    int dim = 0;
    RowMatF vectors; // |V| x dim

    int row_of(const std::string& token) const {
        auto it = vocab.find(token);
        return it == vocab.end() ? kUnkRow : it->second;
    }

    // Rows sorted by index, for dumps and serialization.
    std::vector<std::string> ordered_vocab() const;
};

// Skip-gram with negative sampling over the abstracted token corpus.
// Single-threaded and deterministic under cfg.seed; "<pad>" never trains.
// Throws EmptyCorpus when no tokens are present.
EmbeddingTable train_word2vec(const std::vector<TokenSequence>& corpus,
                              const PipelineConfig& cfg);

// Row-per-token embedding of a fitted sequence: an l x k matrix.
RowMatF embed(const TokenSequence& seq, const EmbeddingTable& table);

} // namespace vulnrank::textpipe

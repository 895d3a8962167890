#include "vulnrank/textpipe/word2vec.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vulnrank/util/error.hpp"
#include "vulnrank/util/rng.hpp"

namespace vulnrank::textpipe {

std::vector<std::string> EmbeddingTable::ordered_vocab() const {
    std::vector<std::string> out(vocab.size());
    for (const auto& [tok, row] : vocab)
        out[static_cast<size_t>(row)] = tok;
    return out;
}

EmbeddingTable train_word2vec(const std::vector<TokenSequence>& corpus,
                              const PipelineConfig& cfg) {
    // Vocabulary: frequency order (count desc, lexeme asc) behind the two
    // reserved rows. Rare tokens fold into "<unk>".
    std::map<std::string, long> counts;
    long total_tokens = 0;
    for (const auto& seq : corpus)
        for (const auto& tok : seq.tokens) {
            if (tok == kPadToken)
                continue;
            ++counts[tok];
            ++total_tokens;
        }
    if (total_tokens == 0)
        throw EmptyCorpus();

    std::vector<std::pair<std::string, long>> kept;
    long unk_count = 0;
    for (const auto& [tok, c] : counts) {
        if (c >= cfg.w2v_min_count)
            kept.emplace_back(tok, c);
        else
            unk_count += c;
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });

    EmbeddingTable table;
    table.dim = cfg.embed_dim;
    table.vocab[kPadToken] = EmbeddingTable::kPadRow;
    table.vocab[kUnkToken] = EmbeddingTable::kUnkRow;
    std::vector<long> row_count{0, unk_count};
    for (const auto& [tok, c] : kept) {
        table.vocab[tok] = static_cast<int>(row_count.size());
        row_count.push_back(c);
    }
    const int v = static_cast<int>(row_count.size());
    const int dim = table.dim;

    Rng rng(sub_seed(cfg.seed, "w2v"));
    RowMatF syn0 = RowMatF::Zero(v, dim);
    RowMatF syn1 = RowMatF::Zero(v, dim);
    for (int r = EmbeddingTable::kUnkRow; r < v; ++r)
        for (int d = 0; d < dim; ++d)
            syn0(r, d) = rng.uniformf(-0.5f, 0.5f) / static_cast<float>(dim);

    // Unigram table (counts^0.75) for negative sampling; pad excluded.
    const int kTableSize = 100000;
    std::vector<int> unigram;
    unigram.reserve(kTableSize);
    double norm = 0.0;
    for (int r = EmbeddingTable::kUnkRow; r < v; ++r)
        norm += std::pow(static_cast<double>(row_count[r]), 0.75);
    if (norm > 0.0) {
        int r = EmbeddingTable::kUnkRow;
        double cum = std::pow(static_cast<double>(row_count[r]), 0.75) / norm;
        for (int i = 0; i < kTableSize; ++i) {
            unigram.push_back(r);
            if (static_cast<double>(i) / kTableSize > cum && r < v - 1) {
                ++r;
                cum += std::pow(static_cast<double>(row_count[r]), 0.75) / norm;
            }
        }
    }
    // Rows with zero count (an untrained <unk>) must not be drawn.
    std::erase_if(unigram, [&row_count](int r) { return row_count[r] == 0; });
    if (unigram.empty())
        unigram.push_back(EmbeddingTable::kUnkRow);

    const float start_lr = 0.025f;
    const float min_lr = start_lr * 1e-4f;
    const long planned = std::max<long>(1, total_tokens * cfg.w2v_epochs);
    long processed = 0;
    float lr = start_lr;

    std::vector<float> grad_in(static_cast<size_t>(dim));
    for (int epoch = 0; epoch < cfg.w2v_epochs; ++epoch) {
        for (const auto& seq : corpus) {
            std::vector<int> sent;
            sent.reserve(seq.tokens.size());
            for (const auto& tok : seq.tokens) {
                if (tok == kPadToken)
                    continue;
                auto it = table.vocab.find(tok);
                sent.push_back(it == table.vocab.end() ? EmbeddingTable::kUnkRow : it->second);
            }
            for (size_t pos = 0; pos < sent.size(); ++pos) {
                ++processed;
                if (processed % 10000 == 0) {
                    lr = start_lr *
                         (1.0f - static_cast<float>(processed) / static_cast<float>(planned));
                    lr = std::max(lr, min_lr);
                }
                const int center = sent[pos];
                const int span = 1 + static_cast<int>(rng.below(
                                         static_cast<uint64_t>(cfg.w2v_window)));
                for (int off = -span; off <= span; ++off) {
                    if (off == 0)
                        continue;
                    const std::ptrdiff_t cpos = static_cast<std::ptrdiff_t>(pos) + off;
                    if (cpos < 0 || cpos >= static_cast<std::ptrdiff_t>(sent.size()))
                        continue;
                    const int ctx = sent[static_cast<size_t>(cpos)];

                    std::fill(grad_in.begin(), grad_in.end(), 0.0f);
                    for (int neg = 0; neg <= cfg.w2v_negatives; ++neg) {
                        int target;
                        float label;
                        if (neg == 0) {
                            target = ctx;
                            label = 1.0f;
                        } else {
                            target = unigram[rng.below(unigram.size())];
                            if (target == ctx)
                                continue;
                            label = 0.0f;
                        }
                        float f = syn0.row(center).dot(syn1.row(target));
                        float sig = 1.0f / (1.0f + std::exp(-f));
                        float g = (label - sig) * lr;
                        for (int d = 0; d < dim; ++d)
                            grad_in[static_cast<size_t>(d)] += g * syn1(target, d);
                        for (int d = 0; d < dim; ++d)
                            syn1(target, d) += g * syn0(center, d);
                    }
                    for (int d = 0; d < dim; ++d)
                        syn0(center, d) += grad_in[static_cast<size_t>(d)];
                }
            }
        }
    }

    syn0.row(EmbeddingTable::kPadRow).setZero();
    table.vectors = std::move(syn0);
    return table;
}

RowMatF embed(const TokenSequence& seq, const EmbeddingTable& table) {
    RowMatF out(static_cast<Eigen::Index>(seq.tokens.size()), table.dim);
    for (size_t t = 0; t < seq.tokens.size(); ++t)
        out.row(static_cast<Eigen::Index>(t)) = table.vectors.row(table.row_of(seq.tokens[t]));
    return out;
}

} // namespace vulnrank::textpipe

#include "vulnrank/textpipe/sequence.hpp"

#include "vulnrank/frontend/lexer.hpp"
#include "vulnrank/textpipe/config.hpp"

namespace vulnrank::textpipe {

TokenSequence tokenize(const context::ContextDocument& doc) {
    TokenSequence seq;
    for (const auto& s : doc.statements) {
        if (s.warned && seq.warn_index < 0)
            seq.warn_index = static_cast<std::ptrdiff_t>(seq.tokens.size());
        for (const auto& tok : frontend::lex(s.text))
            seq.tokens.push_back(tok.text);
    }
    return seq;
}

TokenSequence fit_length(const TokenSequence& seq, int l) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(seq.tokens.size());
    TokenSequence out;

    if (n <= l) {
        out.tokens = seq.tokens;
        out.tokens.resize(static_cast<size_t>(l), kPadToken);
        out.warn_index = seq.warn_index;
        return out;
    }

    const std::ptrdiff_t excess = n - l;
    const std::ptrdiff_t drop_head = excess / 2;
    out.tokens.assign(seq.tokens.begin() + drop_head, seq.tokens.begin() + drop_head + l);
    if (seq.warn_index >= drop_head && seq.warn_index < drop_head + l)
        out.warn_index = seq.warn_index - drop_head;
    else
        out.warn_index = kNoWarnIndex;
    return out;
}

} // namespace vulnrank::textpipe

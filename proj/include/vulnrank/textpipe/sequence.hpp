#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vulnrank/context/document.hpp"

namespace vulnrank::textpipe {

// Flat token stream for one context document. warn_index points at the
// first token of the warned statement, or kNoWarnIndex once truncation has
// dropped it.
struct TokenSequence {
    std::vector<std::string> tokens;
    std::ptrdiff_t warn_index = -1;
};

inline constexpr std::ptrdiff_t kNoWarnIndex = -1;

TokenSequence tokenize(const context::ContextDocument& doc);

// Pads "<pad>" at the end up to l, or truncates gradually from both sides:
// floor(excess/2) tokens off the head, ceil(excess/2) off the tail.
TokenSequence fit_length(const TokenSequence& seq, int l);

} // namespace vulnrank::textpipe

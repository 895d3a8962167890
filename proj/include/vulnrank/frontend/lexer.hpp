#pragma once

#include <string_view>
#include <vector>

#include "vulnrank/frontend/token.hpp"

namespace vulnrank::frontend {

// Maximal-munch tokenizer for the mini-C subset. Comments (// and /* */)
// and whitespace produce no tokens. Throws LexError on an unrecognized
// character or an unterminated literal/comment.
std::vector<Token> lex(std::string_view source);

} // namespace vulnrank::frontend

#pragma once

#include <string>
#include <vector>

namespace vulnrank::frontend {

enum class TokenKind {
    Keyword,
    Identifier,
    Constant,
    Operator,
    Punctuation,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;   // 1-based
    int col = 1;    // 1-based
    size_t offset = 0; // byte offset into the source buffer
};

const char* token_kind_name(TokenKind k);

bool is_keyword(const std::string& word);

} // namespace vulnrank::frontend

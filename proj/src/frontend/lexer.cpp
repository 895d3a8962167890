#include "vulnrank/frontend/lexer.hpp"

#include <array>
#include <cctype>

#include "vulnrank/util/error.hpp"

namespace vulnrank::frontend {

namespace {

const std::array<std::string_view, 7> kKeywords = {
    "int", "char", "if", "else", "while", "for", "return",
};

// Multi-character operators first so maximal munch wins over their prefixes.
const std::array<std::string_view, 6> kTwoCharOps = {
    "==", "!=", "<=", ">=", "&&", "||",
};

bool is_one_char_op(char c) {
    switch (c) {
    case '=': case '<': case '>': case '+': case '-':
    case '*': case '/': case '%': case '!': case '&':
        return true;
    default:
        return false;
    }
}

bool is_punct(char c) {
    switch (c) {
    case '(': case ')': case '{': case '}':
    case '[': case ']': case ',': case ';':
        return true;
    default:
        return false;
    }
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
    std::string_view src;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

// Consumes a quoted literal (char or string) including escape sequences.
// The whole literal, quotes included, becomes one constant token.
void take_quoted(Cursor& c, char quote) {
    int start_line = c.line, start_col = c.col;
    c.advance(); // opening quote
    while (!c.done() && c.peek() != quote) {
        if (c.peek() == '\n')
            throw LexError(start_line, start_col, "unterminated literal");
        if (c.peek() == '\\') {
            c.advance();
            if (c.done())
                throw LexError(start_line, start_col, "unterminated literal");
        }
        c.advance();
    }
    if (c.done())
        throw LexError(start_line, start_col, "unterminated literal");
    c.advance(); // closing quote
}

} // namespace

const char* token_kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Constant: return "constant";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    }
    return "?";
}

bool is_keyword(const std::string& word) {
    for (auto kw : kKeywords)
        if (word == kw)
            return true;
    return false;
}

std::vector<Token> lex(std::string_view source) {
    std::vector<Token> out;
    Cursor c{source};

    while (!c.done()) {
        char ch = c.peek();

        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            c.advance();
            continue;
        }

        // Comments
        if (ch == '/' && c.peek(1) == '/') {
            while (!c.done() && c.peek() != '\n')
                c.advance();
            continue;
        }
        if (ch == '/' && c.peek(1) == '*') {
            int start_line = c.line, start_col = c.col;
            c.advance();
            c.advance();
            while (!(c.peek() == '*' && c.peek(1) == '/')) {
                if (c.done())
                    throw LexError(start_line, start_col, "unterminated comment");
                c.advance();
            }
            c.advance();
            c.advance();
            continue;
        }

        Token tok;
        tok.line = c.line;
        tok.col = c.col;
        tok.offset = c.pos;

        if (is_ident_start(ch)) {
            size_t start = c.pos;
            while (!c.done() && is_ident_char(c.peek()))
                c.advance();
            tok.text = std::string(source.substr(start, c.pos - start));
            tok.kind = is_keyword(tok.text) ? TokenKind::Keyword : TokenKind::Identifier;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = c.pos;
            while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
                c.advance();
            tok.text = std::string(source.substr(start, c.pos - start));
            tok.kind = TokenKind::Constant;
        } else if (ch == '\'' || ch == '"') {
            size_t start = c.pos;
            take_quoted(c, ch);
            tok.text = std::string(source.substr(start, c.pos - start));
            tok.kind = TokenKind::Constant;
        } else if (is_punct(ch)) {
            tok.text = std::string(1, ch);
            tok.kind = TokenKind::Punctuation;
            c.advance();
        } else if (is_one_char_op(ch)) {
            std::string_view two = source.substr(c.pos, 2);
            bool matched = false;
            for (auto op : kTwoCharOps) {
                if (two == op) {
                    tok.text = std::string(op);
                    c.advance();
                    c.advance();
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                tok.text = std::string(1, ch);
                c.advance();
            }
            tok.kind = TokenKind::Operator;
        } else {
            throw LexError(c.line, c.col, std::string("unrecognized character '") + ch + "'");
        }

        out.push_back(std::move(tok));
    }
    return out;
}

} // namespace vulnrank::frontend

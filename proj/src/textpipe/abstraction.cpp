#include "vulnrank/textpipe/abstraction.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "vulnrank/frontend/lexer.hpp"

namespace vulnrank::textpipe {

using context::ContextDocument;
using frontend::Token;
using frontend::TokenKind;

std::string preprocess_text(const std::string& text) {
    std::string no_comments;
    no_comments.reserve(text.size());
    size_t i = 0;
    char in_quote = 0;
    while (i < text.size()) {
        char c = text[i];
        if (in_quote) {
            no_comments += c;
            if (c == '\\' && i + 1 < text.size()) {
                no_comments += text[++i];
            } else if (c == in_quote) {
                in_quote = 0;
            }
            ++i;
            continue;
        }
        if (c == '"' || c == '\'') {
            in_quote = c;
            no_comments += c;
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            no_comments += ' ';
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
            i += 2;
            while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/'))
                ++i;
            i = std::min(i + 2, text.size());
            no_comments += ' ';
            continue;
        }
        no_comments += c;
        ++i;
    }

    std::string out;
    out.reserve(no_comments.size());
    for (char c : no_comments) {
        if (c == '\t' || c == '\\' || c == '\n' || c == '\r')
            c = ' ';
        if (c == ' ' && (out.empty() || out.back() == ' '))
            continue;
        out += c;
    }
    while (!out.empty() && out.back() == ' ')
        out.pop_back();
    return out;
}

ContextDocument preprocess(const ContextDocument& doc) {
    ContextDocument out = doc;
    for (auto& s : out.statements)
        s.text = preprocess_text(s.text);
    return out;
}

namespace {

// First-occurrence index assignment for one abstraction category. Tokens
// that already carry this category's shape (e.g. VAR3 on a second pass) keep
// their index when it is still free, which makes the whole pass idempotent
// and keeps index assignment injective.
class IndexTable {
public:
    explicit IndexTable(std::string prefix) : prefix_(std::move(prefix)) {}

    std::string rename(const std::string& lexeme) {
        auto it = map_.find(lexeme);
        if (it == map_.end()) {
            int idx = preferred_index(lexeme);
            if (idx < 0 || used_.count(idx))
                idx = fresh_index();
            used_.insert(idx);
            it = map_.emplace(lexeme, idx).first;
        }
        return prefix_ + std::to_string(it->second);
    }

    bool matches(const std::string& lexeme) const { return preferred_index(lexeme) >= 1; }

private:
    int preferred_index(const std::string& lexeme) const {
        if (lexeme.size() <= prefix_.size() || lexeme.compare(0, prefix_.size(), prefix_) != 0)
            return -1;
        int idx = 0;
        for (size_t i = prefix_.size(); i < lexeme.size(); ++i) {
            char c = lexeme[i];
            if (c < '0' || c > '9')
                return -1;
            idx = idx * 10 + (c - '0');
        }
        return idx >= 1 ? idx : -1;
    }

    int fresh_index() {
        while (used_.count(cursor_))
            ++cursor_;
        return cursor_++;
    }

    std::string prefix_;
    std::unordered_map<std::string, int> map_;
    std::unordered_set<int> used_;
    int cursor_ = 1;
};

} // namespace

ContextDocument abstract_identifiers(const ContextDocument& doc,
                                     const std::vector<std::string>& keep_functions) {
    IndexTable funcs("FUNC"), vars("VAR"), literals("LITERAL");
    ContextDocument out = doc;

    for (auto& s : out.statements) {
        std::vector<Token> toks = frontend::lex(s.text);
        std::string rebuilt;
        size_t copied = 0;
        for (size_t t = 0; t < toks.size(); ++t) {
            const Token& tok = toks[t];
            std::string replacement;
            if (tok.kind == TokenKind::Identifier) {
                bool is_call = t + 1 < toks.size() && toks[t + 1].text == "(";
                if (is_call) {
                    if (std::find(keep_functions.begin(), keep_functions.end(), tok.text) ==
                        keep_functions.end())
                        replacement = funcs.rename(tok.text);
                } else {
                    // LITERALn reappears as an identifier on a second pass;
                    // route it back to the literal table.
                    if (literals.matches(tok.text))
                        replacement = literals.rename(tok.text);
                    else
                        replacement = vars.rename(tok.text);
                }
            } else if (tok.kind == TokenKind::Constant) {
                replacement = literals.rename(tok.text);
            }
            if (!replacement.empty() && replacement != tok.text) {
                rebuilt += s.text.substr(copied, tok.offset - copied);
                rebuilt += replacement;
                copied = tok.offset + tok.text.size();
            }
        }
        rebuilt += s.text.substr(copied);
        s.text = std::move(rebuilt);
    }
    return out;
}

} // namespace vulnrank::textpipe

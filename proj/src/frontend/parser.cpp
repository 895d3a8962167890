#include "vulnrank/frontend/parser.hpp"

#include <algorithm>

#include "vulnrank/frontend/lexer.hpp"
#include "vulnrank/util/error.hpp"

namespace vulnrank::frontend {

namespace {

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string source)
        : toks_(std::move(tokens)), source_(std::move(source)) {}

    TranslationUnit run() {
        TranslationUnit unit;
        unit.source = source_;
        while (!done()) {
            parse_top_level(unit);
        }
        for (auto& fn : unit.functions)
            index_statements(fn);
        return unit;
    }

private:
    std::vector<Token> toks_;
    std::string source_;
    size_t pos_ = 0;

    bool done() const { return pos_ >= toks_.size(); }

    const Token& peek(size_t ahead = 0) const {
        static Token eof{TokenKind::Punctuation, "<eof>", 0, 0, 0};
        if (pos_ + ahead >= toks_.size())
            return eof;
        return toks_[pos_ + ahead];
    }

    const Token& advance() {
        if (done())
            fail("more input");
        return toks_[pos_++];
    }

    bool at(TokenKind k, const char* text = nullptr) const {
        if (done())
            return false;
        const Token& t = peek();
        return t.kind == k && (text == nullptr || t.text == text);
    }

    bool accept(TokenKind k, const char* text) {
        if (at(k, text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(TokenKind k, const char* text) {
        if (!at(k, text))
            fail(std::string("'") + text + "'");
        return toks_[pos_++];
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        if (done()) {
            int line = toks_.empty() ? 1 : toks_.back().line;
            int col = toks_.empty() ? 1 : toks_.back().col;
            throw ParseError(line, col, expected + " (got end of input)");
        }
        throw ParseError(t.line, t.col, expected + " (got '" + t.text + "')");
    }

    size_t end_of(const Token& t) const { return t.offset + t.text.size(); }

    bool at_type() const { return at(TokenKind::Keyword, "int") || at(TokenKind::Keyword, "char"); }

    // --- top level ------------------------------------------------------

    void parse_top_level(TranslationUnit& unit) {
        if (!at_type())
            fail("'int' or 'char'");
        // type ident '(' => function, otherwise a global declaration
        size_t look = 1;
        if (peek(look).kind == TokenKind::Operator && peek(look).text == "*")
            ++look;
        if (peek(look).kind != TokenKind::Identifier)
            fail("identifier");
        bool is_fn = peek(look + 1).kind == TokenKind::Punctuation && peek(look + 1).text == "(";
        if (is_fn)
            parse_function(unit);
        else
            unit.globals.push_back(parse_decl_stmt());
    }

    void parse_function(TranslationUnit& unit) {
        FunctionAst fn;
        const Token& type_tok = advance();
        fn.return_type = type_tok.text;
        if (accept(TokenKind::Operator, "*"))
            fn.returns_pointer = true;
        const Token& name_tok = advance();
        fn.name = name_tok.text;
        fn.line = name_tok.line;
        fn.col = name_tok.col;
        if (unit.find_function(fn.name))
            throw ParseError(name_tok.line, name_tok.col,
                             "unique function name (duplicate '" + fn.name + "')");
        expect(TokenKind::Punctuation, "(");
        if (!at(TokenKind::Punctuation, ")")) {
            while (true) {
                fn.params.push_back(parse_param());
                if (!accept(TokenKind::Punctuation, ","))
                    break;
            }
        }
        expect(TokenKind::Punctuation, ")");
        expect(TokenKind::Punctuation, "{");
        while (!accept(TokenKind::Punctuation, "}"))
            fn.body.push_back(parse_stmt());
        unit.functions.push_back(std::move(fn));
    }

    Param parse_param() {
        if (!at_type())
            fail("parameter type");
        Param p;
        p.type_name = advance().text;
        if (accept(TokenKind::Operator, "*"))
            p.is_pointer = true;
        if (peek().kind != TokenKind::Identifier)
            fail("parameter name");
        const Token& name = advance();
        p.name = name.text;
        p.line = name.line;
        p.col = name.col;
        return p;
    }

    // --- statements -----------------------------------------------------

    StmtPtr parse_stmt() {
        if (at_type())
            return parse_decl_stmt();
        if (at(TokenKind::Keyword, "if"))
            return parse_if();
        if (at(TokenKind::Keyword, "while"))
            return parse_while();
        if (at(TokenKind::Keyword, "for"))
            return parse_for();
        if (at(TokenKind::Keyword, "return"))
            return parse_return();
        if (at(TokenKind::Punctuation, "{"))
            fail("statement"); // blocks handled by callers via parse_body
        return parse_expr_stmt();
    }

    // A body is either a braced block or a single statement.
    void parse_body(std::vector<StmtPtr>& out) {
        if (accept(TokenKind::Punctuation, "{")) {
            while (!accept(TokenKind::Punctuation, "}"))
                out.push_back(parse_stmt());
        } else {
            out.push_back(parse_stmt());
        }
    }

    StmtPtr parse_decl_stmt() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Decl;
        const Token& type_tok = advance();
        s->type_name = type_tok.text;
        s->line = type_tok.line;
        s->col = type_tok.col;
        s->span_begin = type_tok.offset;
        if (accept(TokenKind::Operator, "*"))
            s->is_pointer = true;
        if (peek().kind != TokenKind::Identifier)
            fail("declared name");
        s->decl_name = advance().text;
        if (accept(TokenKind::Punctuation, "[")) {
            if (peek().kind != TokenKind::Constant)
                fail("array size constant");
            s->array_size = std::stol(advance().text);
            expect(TokenKind::Punctuation, "]");
        }
        if (accept(TokenKind::Operator, "="))
            s->init = parse_expr();
        const Token& semi = expect(TokenKind::Punctuation, ";");
        s->span_end = end_of(semi);
        return s;
    }

    StmtPtr parse_expr_stmt() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Expr;
        const Token& first = peek();
        s->line = first.line;
        s->col = first.col;
        s->span_begin = first.offset;
        s->expr = parse_expr();
        const Token& semi = expect(TokenKind::Punctuation, ";");
        s->span_end = end_of(semi);
        return s;
    }

    StmtPtr parse_return() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Return;
        const Token& kw = advance();
        s->line = kw.line;
        s->col = kw.col;
        s->span_begin = kw.offset;
        if (!at(TokenKind::Punctuation, ";"))
            s->expr = parse_expr();
        const Token& semi = expect(TokenKind::Punctuation, ";");
        s->span_end = end_of(semi);
        return s;
    }

    StmtPtr parse_if() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::If;
        const Token& kw = advance();
        s->line = kw.line;
        s->col = kw.col;
        s->span_begin = kw.offset;
        expect(TokenKind::Punctuation, "(");
        s->cond = parse_expr();
        const Token& close = expect(TokenKind::Punctuation, ")");
        s->span_end = end_of(close);
        parse_body(s->then_body);
        if (accept(TokenKind::Keyword, "else"))
            parse_body(s->else_body);
        return s;
    }

    StmtPtr parse_while() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::While;
        const Token& kw = advance();
        s->line = kw.line;
        s->col = kw.col;
        s->span_begin = kw.offset;
        expect(TokenKind::Punctuation, "(");
        s->cond = parse_expr();
        const Token& close = expect(TokenKind::Punctuation, ")");
        s->span_end = end_of(close);
        parse_body(s->then_body);
        return s;
    }

    StmtPtr parse_for() {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::For;
        const Token& kw = advance();
        s->line = kw.line;
        s->col = kw.col;
        s->span_begin = kw.offset;
        expect(TokenKind::Punctuation, "(");
        if (!accept(TokenKind::Punctuation, ";")) {
            s->for_init = at_type() ? parse_decl_stmt() : parse_expr_stmt();
        }
        const Token& cond_first = peek();
        s->cond = parse_expr(); // loop condition is required
        size_t cond_begin = cond_first.offset;
        size_t cond_end = end_of(toks_[pos_ - 1]);
        expect(TokenKind::Punctuation, ";");
        if (!at(TokenKind::Punctuation, ")")) {
            auto step = std::make_unique<Stmt>();
            step->kind = StmtKind::Expr;
            const Token& first = peek();
            step->line = first.line;
            step->col = first.col;
            step->span_begin = first.offset;
            step->expr = parse_expr();
            step->span_end = end_of(toks_[pos_ - 1]);
            s->for_step = std::move(step);
        }
        const Token& close = expect(TokenKind::Punctuation, ")");
        s->span_end = end_of(close);
        s->render_override =
            "for ( " + source_.substr(cond_begin, cond_end - cond_begin) + " )";
        parse_body(s->then_body);
        return s;
    }

    // --- expressions ------------------------------------------------------
    // assignment (right assoc) > || > && > ==/!= > relational > +- > */% > unary > postfix

    ExprPtr parse_expr() { return parse_assignment(); }

    ExprPtr parse_assignment() {
        ExprPtr left = parse_or();
        if (at(TokenKind::Operator, "=")) {
            const Token& op = advance();
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::Assign;
            e->op = "=";
            e->line = op.line;
            e->col = op.col;
            e->lhs = std::move(left);
            e->rhs = parse_assignment();
            return e;
        }
        return left;
    }

    ExprPtr parse_binary_level(int level) {
        static const std::vector<std::vector<const char*>> ops = {
            {"||"}, {"&&"}, {"==", "!="}, {"<", "<=", ">", ">="}, {"+", "-"}, {"*", "/", "%"},
        };
        if (level >= static_cast<int>(ops.size()))
            return parse_unary();
        ExprPtr left = parse_binary_level(level + 1);
        while (true) {
            const char* matched = nullptr;
            for (const char* op : ops[level])
                if (at(TokenKind::Operator, op)) {
                    matched = op;
                    break;
                }
            if (!matched)
                break;
            const Token& op_tok = advance();
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::Binary;
            e->op = matched;
            e->line = op_tok.line;
            e->col = op_tok.col;
            e->lhs = std::move(left);
            e->rhs = parse_binary_level(level + 1);
            left = std::move(e);
        }
        return left;
    }

    ExprPtr parse_or() { return parse_binary_level(0); }

    ExprPtr parse_unary() {
        for (const char* op : {"*", "&", "!", "-"}) {
            if (at(TokenKind::Operator, op)) {
                const Token& op_tok = advance();
                auto e = std::make_unique<Expr>();
                e->kind = ExprKind::Unary;
                e->op = op;
                e->line = op_tok.line;
                e->col = op_tok.col;
                e->lhs = parse_unary();
                return e;
            }
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (true) {
            if (at(TokenKind::Punctuation, "[")) {
                const Token& open = advance();
                auto idx = std::make_unique<Expr>();
                idx->kind = ExprKind::Index;
                idx->line = open.line;
                idx->col = open.col;
                idx->lhs = std::move(e);
                idx->rhs = parse_expr();
                expect(TokenKind::Punctuation, "]");
                e = std::move(idx);
            } else if (at(TokenKind::Punctuation, "(") && e->kind == ExprKind::Name) {
                advance();
                auto call = std::make_unique<Expr>();
                call->kind = ExprKind::Call;
                call->name = e->name;
                call->line = e->line;
                call->col = e->col;
                if (!at(TokenKind::Punctuation, ")")) {
                    while (true) {
                        call->args.push_back(parse_expr());
                        if (!accept(TokenKind::Punctuation, ","))
                            break;
                    }
                }
                expect(TokenKind::Punctuation, ")");
                e = std::move(call);
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_primary() {
        if (peek().kind == TokenKind::Identifier) {
            const Token& t = advance();
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::Name;
            e->name = t.text;
            e->line = t.line;
            e->col = t.col;
            return e;
        }
        if (peek().kind == TokenKind::Constant) {
            const Token& t = advance();
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::Constant;
            e->literal = t.text;
            e->line = t.line;
            e->col = t.col;
            return e;
        }
        if (accept(TokenKind::Punctuation, "(")) {
            ExprPtr e = parse_expr();
            expect(TokenKind::Punctuation, ")");
            return e;
        }
        fail("expression");
    }

    // --- statement index --------------------------------------------------

    static void collect(Stmt* s, std::vector<Stmt*>& out) {
        out.push_back(s);
        if (s->for_init)
            collect(s->for_init.get(), out);
        if (s->for_step)
            collect(s->for_step.get(), out);
        for (auto& c : s->then_body)
            collect(c.get(), out);
        for (auto& c : s->else_body)
            collect(c.get(), out);
    }

    static void index_statements(FunctionAst& fn) {
        fn.statements.clear();
        for (auto& s : fn.body)
            collect(s.get(), fn.statements);
        std::sort(fn.statements.begin(), fn.statements.end(),
                  [](const Stmt* a, const Stmt* b) { return a->span_begin < b->span_begin; });
        for (size_t i = 0; i < fn.statements.size(); ++i)
            fn.statements[i]->id = static_cast<StatementId>(i);
    }
};

} // namespace

TranslationUnit parse(std::vector<Token> tokens, std::string source) {
    return Parser(std::move(tokens), std::move(source)).run();
}

TranslationUnit parse_source(const std::string& source) {
    return parse(lex(source), source);
}

} // namespace vulnrank::frontend

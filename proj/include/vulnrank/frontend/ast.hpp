#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vulnrank/frontend/token.hpp"

namespace vulnrank::frontend {

using StatementId = int;

enum class ExprKind { Name, Constant, Unary, Binary, Assign, Call, Index };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    ExprKind kind;
    int line = 0, col = 0;

    std::string name;    // Name / Call callee
    std::string literal; // Constant lexeme
    std::string op;      // Unary / Binary operator text

    ExprPtr lhs; // Unary operand, Binary/Assign left, Index base
    ExprPtr rhs; // Binary/Assign right, Index subscript
    std::vector<ExprPtr> args; // Call arguments
};

enum class StmtKind { Decl, Expr, Return, If, While, For };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

// One atomic statement = one node. Control statements are represented by
// their header (condition); bodies hang off the node and the nested
// statements have their own ids. A for loop contributes up to three nodes:
// init statement, the header, and the step statement.
struct Stmt {
    StmtKind kind;
    StatementId id = -1; // dense 0..n-1 within the function, source order
    int line = 0, col = 0;
    size_t span_begin = 0, span_end = 0; // header span in the source buffer

    // Decl
    std::string type_name;
    bool is_pointer = false;
    long array_size = -1; // -1: scalar
    std::string decl_name;
    ExprPtr init;

    // Expr statement / return value (null for bare return)
    ExprPtr expr;

    // If / While / For condition
    ExprPtr cond;
    std::vector<StmtPtr> then_body; // If then, While/For body
    std::vector<StmtPtr> else_body;

    // For clauses (either may be null)
    StmtPtr for_init;
    StmtPtr for_step;

    // Synthesized header text, used where the raw span would duplicate
    // child statements (for-loop headers render as "for ( <cond> )").
    std::string render_override;
};

struct Param {
    std::string type_name;
    bool is_pointer = false;
    std::string name;
    int line = 0, col = 0;
};

struct FunctionAst {
    std::string name;
    int line = 0, col = 0;
    bool returns_pointer = false;
    std::string return_type;
    std::vector<Param> params;
    std::vector<StmtPtr> body;
    std::vector<Stmt*> statements; // flat index, statements[id]->id == id
};

struct TranslationUnit {
    std::string source; // retained for statement rendering
    std::vector<StmtPtr> globals;
    std::vector<FunctionAst> functions;

    const FunctionAst* find_function(const std::string& name) const {
        for (const auto& f : functions)
            if (f.name == name)
                return &f;
        return nullptr;
    }
};

// Raw header text of a statement (override-aware).
std::string stmt_text(const TranslationUnit& unit, const Stmt& s);

// Indented AST dump for the CLI debug flag.
std::string dump_ast(const TranslationUnit& unit);

} // namespace vulnrank::frontend

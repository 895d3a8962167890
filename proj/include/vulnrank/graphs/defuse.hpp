#pragma once

#include <string>
#include <vector>

#include "vulnrank/frontend/ast.hpp"
#include "vulnrank/graphs/cfg.hpp"

namespace vulnrank::graphs {

// Per-statement def/use sets over variable names. A store through `*p`
// defines the pseudo-location "*p" (no alias analysis: "*p" and "*q" stay
// distinct); a read of `*p` uses both p and "*p"; `a[i]` writes define a and
// use i, reads use a and i.
struct DefUse {
    std::vector<std::string> defs;
    std::vector<std::string> uses;
};

DefUse stmt_def_use(const frontend::Stmt& s);

// Node-indexed table for a whole CFG: statements by id, entry defines the
// function's parameters, exit is empty.
std::vector<DefUse> function_def_use(const Cfg& g, const frontend::FunctionAst& fn);

// All call expressions appearing anywhere in the statement.
std::vector<const frontend::Expr*> calls_in_stmt(const frontend::Stmt& s);

} // namespace vulnrank::graphs

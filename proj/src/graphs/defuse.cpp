#include "vulnrank/graphs/defuse.hpp"

#include <algorithm>

namespace vulnrank::graphs {

using frontend::Expr;
using frontend::ExprKind;
using frontend::FunctionAst;
using frontend::Stmt;
using frontend::StmtKind;

namespace {

void walk_use(const Expr* e, DefUse& du);

// Assignment target. Non-name bases fall back to plain uses (no def).
void walk_def_target(const Expr* e, DefUse& du) {
    switch (e->kind) {
    case ExprKind::Name:
        du.defs.push_back(e->name);
        return;
    case ExprKind::Index:
        if (e->lhs->kind == ExprKind::Name) {
            du.defs.push_back(e->lhs->name);
        } else {
            walk_use(e->lhs.get(), du);
        }
        walk_use(e->rhs.get(), du);
        return;
    case ExprKind::Unary:
        if (e->op == "*" && e->lhs->kind == ExprKind::Name) {
            du.defs.push_back("*" + e->lhs->name);
            du.uses.push_back(e->lhs->name);
            return;
        }
        walk_use(e, du);
        return;
    default:
        walk_use(e, du);
        return;
    }
}

void walk_use(const Expr* e, DefUse& du) {
    if (!e)
        return;
    switch (e->kind) {
    case ExprKind::Name:
        du.uses.push_back(e->name);
        break;
    case ExprKind::Constant:
        break;
    case ExprKind::Unary:
        if (e->op == "*" && e->lhs->kind == ExprKind::Name) {
            du.uses.push_back(e->lhs->name);
            du.uses.push_back("*" + e->lhs->name);
        } else {
            walk_use(e->lhs.get(), du);
        }
        break;
    case ExprKind::Binary:
        walk_use(e->lhs.get(), du);
        walk_use(e->rhs.get(), du);
        break;
    case ExprKind::Assign:
        walk_def_target(e->lhs.get(), du);
        walk_use(e->rhs.get(), du);
        break;
    case ExprKind::Call:
        for (const auto& a : e->args)
            walk_use(a.get(), du);
        break;
    case ExprKind::Index:
        walk_use(e->lhs.get(), du);
        walk_use(e->rhs.get(), du);
        break;
    }
}

void dedupe(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void collect_calls(const Expr* e, std::vector<const Expr*>& out) {
    if (!e)
        return;
    if (e->kind == ExprKind::Call) {
        out.push_back(e);
        for (const auto& a : e->args)
            collect_calls(a.get(), out);
        return;
    }
    collect_calls(e->lhs.get(), out);
    collect_calls(e->rhs.get(), out);
    for (const auto& a : e->args)
        collect_calls(a.get(), out);
}

} // namespace

DefUse stmt_def_use(const Stmt& s) {
    DefUse du;
    switch (s.kind) {
    case StmtKind::Decl:
        du.defs.push_back(s.decl_name);
        walk_use(s.init.get(), du);
        break;
    case StmtKind::Expr:
    case StmtKind::Return:
        walk_use(s.expr.get(), du);
        break;
    case StmtKind::If:
    case StmtKind::While:
    case StmtKind::For:
        walk_use(s.cond.get(), du);
        break;
    }
    dedupe(du.defs);
    dedupe(du.uses);
    return du;
}

std::vector<DefUse> function_def_use(const Cfg& g, const FunctionAst& fn) {
    std::vector<DefUse> table(g.n_nodes());
    for (const Stmt* s : fn.statements)
        table[s->id] = stmt_def_use(*s);
    for (const auto& p : fn.params)
        table[g.entry()].defs.push_back(p.name);
    dedupe(table[g.entry()].defs);
    return table;
}

std::vector<const Expr*> calls_in_stmt(const Stmt& s) {
    std::vector<const Expr*> out;
    switch (s.kind) {
    case StmtKind::Decl:
        collect_calls(s.init.get(), out);
        break;
    case StmtKind::Expr:
    case StmtKind::Return:
        collect_calls(s.expr.get(), out);
        break;
    case StmtKind::If:
    case StmtKind::While:
    case StmtKind::For:
        collect_calls(s.cond.get(), out);
        break;
    }
    return out;
}

} // namespace vulnrank::graphs

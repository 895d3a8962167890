#include "vulnrank/frontend/ast.hpp"

#include <sstream>

namespace vulnrank::frontend {

std::string stmt_text(const TranslationUnit& unit, const Stmt& s) {
    if (!s.render_override.empty())
        return s.render_override;
    return unit.source.substr(s.span_begin, s.span_end - s.span_begin);
}

namespace {

void dump_expr(const Expr& e, std::ostringstream& out) {
    switch (e.kind) {
    case ExprKind::Name:
        out << e.name;
        break;
    case ExprKind::Constant:
        out << e.literal;
        break;
    case ExprKind::Unary:
        out << "(" << e.op;
        dump_expr(*e.lhs, out);
        out << ")";
        break;
    case ExprKind::Binary:
    case ExprKind::Assign:
        out << "(";
        dump_expr(*e.lhs, out);
        out << " " << e.op << " ";
        dump_expr(*e.rhs, out);
        out << ")";
        break;
    case ExprKind::Call:
        out << e.name << "(";
        for (size_t i = 0; i < e.args.size(); ++i) {
            if (i)
                out << ", ";
            dump_expr(*e.args[i], out);
        }
        out << ")";
        break;
    case ExprKind::Index:
        dump_expr(*e.lhs, out);
        out << "[";
        dump_expr(*e.rhs, out);
        out << "]";
        break;
    }
}

void dump_stmt(const Stmt& s, int depth, std::ostringstream& out) {
    std::string pad(static_cast<size_t>(depth) * 2, ' ');
    out << pad << "#" << s.id << " ";
    switch (s.kind) {
    case StmtKind::Decl:
        out << "decl " << s.type_name << (s.is_pointer ? "*" : "") << " " << s.decl_name;
        if (s.array_size >= 0)
            out << "[" << s.array_size << "]";
        if (s.init) {
            out << " = ";
            dump_expr(*s.init, out);
        }
        out << "\n";
        break;
    case StmtKind::Expr:
        out << "expr ";
        dump_expr(*s.expr, out);
        out << "\n";
        break;
    case StmtKind::Return:
        out << "return";
        if (s.expr) {
            out << " ";
            dump_expr(*s.expr, out);
        }
        out << "\n";
        break;
    case StmtKind::If:
        out << "if ";
        dump_expr(*s.cond, out);
        out << "\n";
        for (const auto& c : s.then_body)
            dump_stmt(*c, depth + 1, out);
        if (!s.else_body.empty()) {
            out << pad << "else\n";
            for (const auto& c : s.else_body)
                dump_stmt(*c, depth + 1, out);
        }
        break;
    case StmtKind::While:
        out << "while ";
        dump_expr(*s.cond, out);
        out << "\n";
        for (const auto& c : s.then_body)
            dump_stmt(*c, depth + 1, out);
        break;
    case StmtKind::For:
        out << "for ";
        dump_expr(*s.cond, out);
        out << "\n";
        if (s.for_init)
            dump_stmt(*s.for_init, depth + 1, out);
        if (s.for_step)
            dump_stmt(*s.for_step, depth + 1, out);
        for (const auto& c : s.then_body)
            dump_stmt(*c, depth + 1, out);
        break;
    }
}

} // namespace

std::string dump_ast(const TranslationUnit& unit) {
    std::ostringstream out;
    for (const auto& g : unit.globals) {
        out << "global " << g->decl_name << "\n";
    }
    for (const auto& fn : unit.functions) {
        out << "function " << fn.name << "(";
        for (size_t i = 0; i < fn.params.size(); ++i) {
            if (i)
                out << ", ";
            out << fn.params[i].type_name << (fn.params[i].is_pointer ? "*" : "") << " "
                << fn.params[i].name;
        }
        out << ")\n";
        for (const auto& s : fn.body)
            dump_stmt(*s, 1, out);
    }
    return out.str();
}

} // namespace vulnrank::frontend

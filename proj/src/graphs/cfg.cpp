#include "vulnrank/graphs/cfg.hpp"

#include <deque>
#include <sstream>

namespace vulnrank::graphs {

using frontend::FunctionAst;
using frontend::Stmt;
using frontend::StmtKind;
using frontend::StmtPtr;

void Cfg::add_edge(int from, int to, EdgeTag tag) {
    edges.push_back({from, to, tag});
}

namespace {

std::vector<char> reaches_exit(const Cfg& g) {
    std::vector<char> seen(g.n_nodes(), 0);
    std::deque<int> work{g.exit()};
    seen[g.exit()] = 1;
    while (!work.empty()) {
        int n = work.front();
        work.pop_front();
        for (int p : g.pred[n])
            if (!seen[p]) {
                seen[p] = 1;
                work.push_back(p);
            }
    }
    return seen;
}

void build_adjacency(Cfg& g) {
    g.succ.assign(g.n_nodes(), {});
    g.pred.assign(g.n_nodes(), {});
    for (const auto& e : g.edges) {
        g.succ[e.from].push_back(e.to);
        g.pred[e.to].push_back(e.from);
    }
}

} // namespace

void Cfg::finalize() {
    build_adjacency(*this);

    // Patch exit reachability (e.g. exit-free cycles in raw graphs): give the
    // lowest stranded node an escape edge and retry.
    while (true) {
        auto ok = reaches_exit(*this);
        int stranded = -1;
        for (int n = 0; n < n_nodes(); ++n)
            if (!ok[n]) {
                stranded = n;
                break;
            }
        if (stranded < 0)
            break;
        add_edge(stranded, exit(), EdgeTag::Synthetic);
        build_adjacency(*this);
    }

    unreachable.clear();
    std::vector<char> seen(n_nodes(), 0);
    std::deque<int> work{entry()};
    seen[entry()] = 1;
    while (!work.empty()) {
        int n = work.front();
        work.pop_front();
        for (int s : succ[n])
            if (!seen[s]) {
                seen[s] = 1;
                work.push_back(s);
            }
    }
    for (int n = 0; n < n_stmts; ++n)
        if (!seen[n])
            unreachable.push_back(n);
}

namespace {

// Dangling forward edge waiting for its target node.
struct Pending {
    int from;
    EdgeTag tag;
};

class Builder {
public:
    explicit Builder(Cfg& g) : g_(g) {}

    std::vector<Pending> stmt_list(const std::vector<StmtPtr>& stmts, std::vector<Pending> in) {
        for (const auto& s : stmts)
            in = one_stmt(*s, std::move(in));
        return in;
    }

    std::vector<Pending> one_stmt(const Stmt& s, std::vector<Pending> in) {
        switch (s.kind) {
        case StmtKind::Decl:
        case StmtKind::Expr:
            connect(in, s.id);
            return {{s.id, EdgeTag::None}};
        case StmtKind::Return:
            connect(in, s.id);
            g_.add_edge(s.id, g_.exit());
            return {};
        case StmtKind::If: {
            connect(in, s.id);
            auto out = stmt_list(s.then_body, {{s.id, EdgeTag::True}});
            if (s.else_body.empty()) {
                out.push_back({s.id, EdgeTag::False});
            } else {
                auto else_out = stmt_list(s.else_body, {{s.id, EdgeTag::False}});
                out.insert(out.end(), else_out.begin(), else_out.end());
            }
            return out;
        }
        case StmtKind::While: {
            connect(in, s.id);
            auto body_out = stmt_list(s.then_body, {{s.id, EdgeTag::True}});
            connect(body_out, s.id); // back edge
            return {{s.id, EdgeTag::False}};
        }
        case StmtKind::For: {
            if (s.for_init) {
                connect(in, s.for_init->id);
                in = {{s.for_init->id, EdgeTag::None}};
            }
            connect(in, s.id);
            auto body_out = stmt_list(s.then_body, {{s.id, EdgeTag::True}});
            if (s.for_step) {
                connect(body_out, s.for_step->id);
                body_out = {{s.for_step->id, EdgeTag::None}};
            }
            connect(body_out, s.id); // back edge
            return {{s.id, EdgeTag::False}};
        }
        }
        return in;
    }

private:
    void connect(const std::vector<Pending>& from, int to) {
        for (const auto& p : from)
            g_.add_edge(p.from, to, p.tag);
    }

    Cfg& g_;
};

} // namespace

Cfg build_cfg(const FunctionAst& fn) {
    Cfg g;
    g.n_stmts = static_cast<int>(fn.statements.size());
    Builder b(g);
    auto out = b.stmt_list(fn.body, {{g.entry(), EdgeTag::None}});
    for (const auto& p : out)
        g.add_edge(p.from, g.exit(), p.tag);
    if (fn.body.empty())
        g.add_edge(g.entry(), g.exit());
    g.finalize();
    return g;
}

Cfg make_raw_cfg(int n_stmts, const std::vector<CfgEdge>& edges) {
    Cfg g;
    g.n_stmts = n_stmts;
    g.edges = edges;
    g.finalize();
    return g;
}

std::string cfg_to_dot(const Cfg& cfg, const frontend::TranslationUnit& unit,
                       const frontend::FunctionAst& fn) {
    std::ostringstream out;
    out << "digraph cfg_" << fn.name << " {\n";
    out << "  node [shape=box];\n";
    out << "  n" << cfg.entry() << " [label=\"entry\",shape=oval];\n";
    out << "  n" << cfg.exit() << " [label=\"exit\",shape=oval];\n";
    for (int i = 0; i < cfg.n_stmts; ++i) {
        std::string text = frontend::stmt_text(unit, *fn.statements[i]);
        std::string escaped;
        for (char c : text) {
            if (c == '"' || c == '\\')
                escaped += '\\';
            escaped += c;
        }
        out << "  n" << i << " [label=\"" << i << ": " << escaped << "\"];\n";
    }
    for (const auto& e : cfg.edges) {
        out << "  n" << e.from << " -> n" << e.to;
        if (e.tag == EdgeTag::True)
            out << " [label=\"T\"]";
        else if (e.tag == EdgeTag::False)
            out << " [label=\"F\"]";
        else if (e.tag == EdgeTag::Synthetic)
            out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace vulnrank::graphs

#include "vulnrank/context/extract.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "vulnrank/frontend/parser.hpp"
#include "vulnrank/util/error.hpp"

namespace vulnrank::context {

using graphs::Cfg;
using graphs::EdgeTag;
using graphs::LinkedProgram;

const char* kind_name(WarningKind k) { return k == WarningKind::BO ? "BO" : "NPD"; }

const char* label_name(Label l) {
    switch (l) {
    case Label::TP: return "TP";
    case Label::FP: return "FP";
    default: return "?";
    }
}

WarningKind parse_kind(const std::string& s) {
    if (s == "BO")
        return WarningKind::BO;
    if (s == "NPD")
        return WarningKind::NPD;
    throw IoError("unknown warning kind '" + s + "'");
}

Label parse_label(const std::string& s) {
    if (s == "TP")
        return Label::TP;
    if (s == "FP")
        return Label::FP;
    if (s == "?")
        return Label::Unknown;
    throw IoError("unknown label '" + s + "'");
}

std::string document_to_text(const ContextDocument& doc) {
    std::ostringstream out;
    for (const auto& s : doc.statements)
        out << (s.warned ? "* " : "  ") << s.text << "\n";
    return out.str();
}

AnalyzedUnit analyze(std::string source) {
    AnalyzedUnit au;
    au.unit = frontend::parse_source(source);
    au.prog = graphs::link_interprocedural(au.unit);
    return au;
}

int resolve_locus(const AnalyzedUnit& au, const std::string& file, int line) {
    int best = -1, best_col = 0;
    for (size_t f = 0; f < au.unit.functions.size(); ++f) {
        for (const auto* s : au.unit.functions[f].statements) {
            if (s->line != line)
                continue;
            if (best < 0 || s->col < best_col) {
                best = au.prog.gid(static_cast<int>(f), s->id);
                best_col = s->col;
            }
        }
    }
    if (best < 0)
        throw UnresolvedLocus(file, line);
    return best;
}

namespace {

std::vector<int> reach(const std::vector<std::vector<int>>& adj, int n_nodes, int from,
                       const LinkedProgram& prog) {
    std::vector<char> seen(n_nodes, 0);
    std::deque<int> work{from};
    seen[from] = 1;
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                work.push_back(u);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < n_nodes; ++v)
        if (seen[v] && !prog.is_entry(v))
            out.push_back(v);
    return out;
}

} // namespace

std::vector<int> backward_slice(const LinkedProgram& prog, int criterion) {
    return reach(prog.pred, prog.n_nodes, criterion, prog);
}

std::vector<int> forward_slice(const LinkedProgram& prog, int criterion) {
    return reach(prog.succ, prog.n_nodes, criterion, prog);
}

namespace {

DocStatement make_doc_stmt(const AnalyzedUnit& au, int fn, int stmt, int warned_gid) {
    const auto* node = au.unit.functions[fn].statements[stmt];
    DocStatement d;
    d.func = fn;
    d.stmt = stmt;
    d.line = node->line;
    d.col = node->col;
    d.warned = au.prog.gid(fn, stmt) == warned_gid;
    d.text = frontend::stmt_text(au.unit, *node);
    return d;
}

} // namespace

ContextDocument extract_slice_context(const AnalyzedUnit& au, int warned_gid) {
    auto bwd = backward_slice(au.prog, warned_gid);
    auto fwd = forward_slice(au.prog, warned_gid);
    std::vector<int> members;
    members.reserve(bwd.size() + fwd.size());
    members.insert(members.end(), bwd.begin(), bwd.end());
    members.insert(members.end(), fwd.begin(), fwd.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    ContextDocument doc;
    doc.variant = DocVariant::Slice;
    for (int gid : members) {
        auto [fn, stmt] = au.prog.decode(gid);
        doc.statements.push_back(make_doc_stmt(au, fn, stmt, warned_gid));
    }
    std::stable_sort(doc.statements.begin(), doc.statements.end(),
                     [](const DocStatement& a, const DocStatement& b) {
                         return std::tie(a.line, a.col) < std::tie(b.line, b.col);
                     });
    return doc;
}

std::vector<int> control_flow_order(const Cfg& cfg) {
    // Ordered successors: false/plain edges first, true edges last, so the
    // reverse post-order lists then-branches before else-branches.
    std::vector<std::vector<int>> ordered(cfg.n_nodes());
    for (const auto& e : cfg.edges)
        if (e.tag != EdgeTag::True)
            ordered[e.from].push_back(e.to);
    for (const auto& e : cfg.edges)
        if (e.tag == EdgeTag::True)
            ordered[e.from].push_back(e.to);

    std::vector<char> visited(cfg.n_nodes(), 0);
    std::vector<int> postorder;
    // Iterative DFS keeping per-node successor progress.
    std::vector<std::pair<int, size_t>> stack{{cfg.entry(), 0}};
    visited[cfg.entry()] = 1;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < ordered[node].size()) {
            int s = ordered[node][next++];
            if (!visited[s]) {
                visited[s] = 1;
                stack.emplace_back(s, 0);
            }
        } else {
            postorder.push_back(node);
            stack.pop_back();
        }
    }

    std::vector<int> order;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it)
        if (*it < cfg.n_stmts)
            order.push_back(*it);
    for (int s = 0; s < cfg.n_stmts; ++s)
        if (!visited[s])
            order.push_back(s);
    return order;
}

ContextDocument extract_gadget(const AnalyzedUnit& au, int warned_gid) {
    auto [fn, _] = au.prog.decode(warned_gid);
    ContextDocument doc;
    doc.variant = DocVariant::Gadget;
    for (int stmt : control_flow_order(au.prog.cfgs[fn]))
        doc.statements.push_back(make_doc_stmt(au, fn, stmt, warned_gid));
    return doc;
}

} // namespace vulnrank::context

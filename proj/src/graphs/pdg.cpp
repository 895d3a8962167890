#include "vulnrank/graphs/pdg.hpp"

#include <algorithm>
#include <sstream>

namespace vulnrank::graphs {

using frontend::FunctionAst;
using frontend::Stmt;
using frontend::StmtKind;
using frontend::TranslationUnit;

Pdg build_pdg(const Cfg& g, const FunctionAst& fn) {
    Pdg pdg;
    pdg.n_stmts = g.n_stmts;
    auto pdom = postdom_sets(g);
    pdg.cdeps = control_dependence(g, pdom);

    auto du = function_def_use(g, fn);
    auto edges = reaching_dependence(g, du);
    for (auto& e : edges) {
        if (e.from == g.entry())
            pdg.param_defs.push_back(std::move(e));
        else if (e.from < g.n_stmts && e.to < g.n_stmts)
            pdg.ddeps.push_back(std::move(e));
    }
    return pdg;
}

CallGraph build_call_graph(const TranslationUnit& unit) {
    CallGraph cg;
    for (size_t f = 0; f < unit.functions.size(); ++f) {
        const auto& fn = unit.functions[f];
        for (const Stmt* s : fn.statements) {
            for (const auto* call : calls_in_stmt(*s)) {
                CallSite site;
                site.caller = static_cast<int>(f);
                site.stmt = s->id;
                site.callee_name = call->name;
                site.callee = -1;
                for (size_t g = 0; g < unit.functions.size(); ++g)
                    if (unit.functions[g].name == call->name) {
                        site.callee = static_cast<int>(g);
                        break;
                    }
                if (site.callee < 0)
                    cg.external.push_back(call->name);
                cg.sites.push_back(std::move(site));
            }
        }
    }
    std::sort(cg.external.begin(), cg.external.end());
    cg.external.erase(std::unique(cg.external.begin(), cg.external.end()),
                      cg.external.end());
    return cg;
}

bool LinkedProgram::is_entry(int gid) const {
    return decode(gid).second < 0;
}

std::pair<int, int> LinkedProgram::decode(int gid) const {
    int fn = static_cast<int>(std::upper_bound(base.begin(), base.end(), gid) -
                              base.begin()) - 1;
    int local = gid - base[fn];
    if (local == pdgs[fn].n_stmts)
        return {fn, -1};
    return {fn, local};
}

LinkedProgram link_interprocedural(const TranslationUnit& unit) {
    LinkedProgram prog;
    const size_t nf = unit.functions.size();
    prog.cfgs.reserve(nf);
    prog.pdgs.reserve(nf);
    prog.base.resize(nf);

    int next = 0;
    for (size_t f = 0; f < nf; ++f) {
        prog.base[f] = next;
        prog.cfgs.push_back(build_cfg(unit.functions[f]));
        prog.pdgs.push_back(build_pdg(prog.cfgs.back(), unit.functions[f]));
        next += prog.pdgs.back().n_stmts + 1; // statements + entry node
    }
    prog.n_nodes = next;
    prog.callgraph = build_call_graph(unit);

    prog.succ.assign(prog.n_nodes, {});
    prog.pred.assign(prog.n_nodes, {});
    auto add = [&prog](int from, int to) {
        prog.succ[from].push_back(to);
        prog.pred[to].push_back(from);
    };

    for (size_t f = 0; f < nf; ++f) {
        const auto& pdg = prog.pdgs[f];
        int fi = static_cast<int>(f);
        for (const auto& [a, b] : pdg.cdeps)
            add(prog.gid(fi, a), prog.gid(fi, b));
        for (const auto& e : pdg.ddeps)
            add(prog.gid(fi, e.from), prog.gid(fi, e.to));
        for (const auto& e : pdg.param_defs)
            add(prog.entry_gid(fi), prog.gid(fi, e.to));
    }

    for (const auto& site : prog.callgraph.sites) {
        if (site.callee < 0)
            continue; // opaque external call
        add(prog.gid(site.caller, site.stmt), prog.entry_gid(site.callee));
        for (const Stmt* s : unit.functions[site.callee].statements)
            if (s->kind == StmtKind::Return)
                add(prog.gid(site.callee, s->id), prog.gid(site.caller, site.stmt));
    }
    return prog;
}

std::string pdg_to_dot(const LinkedProgram& prog, const TranslationUnit& unit) {
    std::ostringstream out;
    out << "digraph pdg {\n  node [shape=box];\n";
    for (size_t f = 0; f < unit.functions.size(); ++f) {
        const auto& fn = unit.functions[f];
        int fi = static_cast<int>(f);
        out << "  subgraph cluster_" << f << " { label=\"" << fn.name << "\";\n";
        out << "    n" << prog.entry_gid(fi) << " [label=\"entry\",shape=oval];\n";
        for (const Stmt* s : fn.statements) {
            std::string text = frontend::stmt_text(unit, *s);
            std::string escaped;
            for (char c : text) {
                if (c == '"' || c == '\\')
                    escaped += '\\';
                escaped += c;
            }
            out << "    n" << prog.gid(fi, s->id) << " [label=\"" << escaped << "\"];\n";
        }
        out << "  }\n";
        const auto& pdg = prog.pdgs[f];
        for (const auto& [a, b] : pdg.cdeps)
            out << "  n" << prog.gid(fi, a) << " -> n" << prog.gid(fi, b)
                << " [style=dashed];\n";
        for (const auto& e : pdg.ddeps)
            out << "  n" << prog.gid(fi, e.from) << " -> n" << prog.gid(fi, e.to)
                << " [label=\"" << e.var << "\"];\n";
        for (const auto& e : pdg.param_defs)
            out << "  n" << prog.entry_gid(fi) << " -> n" << prog.gid(fi, e.to)
                << " [label=\"" << e.var << "\"];\n";
    }
    for (const auto& site : prog.callgraph.sites) {
        if (site.callee < 0)
            continue;
        out << "  n" << prog.gid(site.caller, site.stmt) << " -> n"
            << prog.entry_gid(site.callee) << " [color=blue];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace vulnrank::graphs

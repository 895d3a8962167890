#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vulnrank/graphs/cfg.hpp"
#include "vulnrank/graphs/dependence.hpp"

namespace vulnrank::graphs {

// Per-function program dependence graph. Nodes are the function's
// statements; parameter-binding pseudo-defs hang off the implicit entry and
// are stored separately so the statement node set stays exact.
struct Pdg {
    int n_stmts = 0;
    std::vector<std::pair<int, int>> cdeps; // governor -> dependent
    std::vector<DataDep> ddeps;             // def -> use among statements
    std::vector<DataDep> param_defs;        // entry -> use of a parameter
};

Pdg build_pdg(const Cfg& g, const frontend::FunctionAst& fn);

struct CallSite {
    int caller = -1;          // function index
    frontend::StatementId stmt = -1;
    std::string callee_name;
    int callee = -1;          // -1: external
};

struct CallGraph {
    std::vector<CallSite> sites;
    std::vector<std::string> external; // unresolved callee names, sorted unique
};

CallGraph build_call_graph(const frontend::TranslationUnit& unit);

// Whole-unit dependence graph: every function's PDG plus inter-procedural
// call links (call-site -> callee entry) and return links (callee return ->
// call-site). Global node ids: statements of function f occupy
// [base[f], base[f]+n_stmts), followed by that function's entry node.
struct LinkedProgram {
    std::vector<Cfg> cfgs;
    std::vector<Pdg> pdgs;
    CallGraph callgraph;

    std::vector<int> base;
    int n_nodes = 0;
    std::vector<std::vector<int>> succ, pred;

    int gid(int fn, int stmt) const { return base[fn] + stmt; }
    int entry_gid(int fn) const { return base[fn] + pdgs[fn].n_stmts; }
    bool is_entry(int gid) const;
    // (function index, statement id); statement id is -1 for entry nodes.
    std::pair<int, int> decode(int gid) const;
};

LinkedProgram link_interprocedural(const frontend::TranslationUnit& unit);

std::string pdg_to_dot(const LinkedProgram& prog, const frontend::TranslationUnit& unit);

} // namespace vulnrank::graphs

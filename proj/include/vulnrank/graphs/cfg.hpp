#pragma once

#include <string>
#include <vector>

#include "vulnrank/frontend/ast.hpp"

namespace vulnrank::graphs {

enum class EdgeTag { None, True, False, Synthetic };

struct CfgEdge {
    int from, to;
    EdgeTag tag = EdgeTag::None;
};

// Statement-level control flow graph. Nodes 0..n_stmts-1 are the function's
// statements (by StatementId); two synthetic nodes follow: entry, then exit.
// Every node reaches exit (synthetic edges are patched in if needed) and
// branch headers carry exactly one true and one false successor.
struct Cfg {
    int n_stmts = 0;
    std::vector<CfgEdge> edges;
    std::vector<std::vector<int>> succ, pred;
    std::vector<int> unreachable; // statements with no path from entry

    int entry() const { return n_stmts; }
    int exit() const { return n_stmts + 1; }
    int n_nodes() const { return n_stmts + 2; }

    void add_edge(int from, int to, EdgeTag tag = EdgeTag::None);
    // Rebuilds adjacency, patches exit reachability, records diagnostics.
    void finalize();
};

Cfg build_cfg(const frontend::FunctionAst& fn);

// Also usable for raw test graphs (no FunctionAst behind them).
Cfg make_raw_cfg(int n_stmts, const std::vector<CfgEdge>& edges);

std::string cfg_to_dot(const Cfg& cfg, const frontend::TranslationUnit& unit,
                       const frontend::FunctionAst& fn);

} // namespace vulnrank::graphs

#include "vulnrank/graphs/dependence.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace vulnrank::graphs {

std::vector<std::pair<int, int>> control_dependence(const Cfg& g,
                                                    const std::vector<NodeSet>& pdom) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < g.n_stmts; ++a) { // governors are statements (branch headers)
        if (g.succ[a].size() < 2)
            continue;
        for (int s : g.succ[a]) {
            for (int b = 0; b < g.n_stmts; ++b) {
                if (!pdom[s].test(b))
                    continue;
                bool strictly_pdoms_a = (b != a) && pdom[a].test(b);
                if (!strictly_pdoms_a)
                    out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<int, int>> control_dependence(const Cfg& g) {
    return control_dependence(g, postdom_sets(g));
}

std::vector<DataDep> reaching_dependence(const Cfg& g, const std::vector<DefUse>& du) {
    const int n = g.n_nodes();

    // Enumerate definitions (node, var).
    struct Def {
        int node;
        std::string var;
    };
    std::vector<Def> defs;
    std::map<std::string, std::vector<int>> defs_of_var; // var -> def indices
    for (int v = 0; v < n; ++v)
        for (const auto& var : du[v].defs) {
            defs_of_var[var].push_back(static_cast<int>(defs.size()));
            defs.push_back({v, var});
        }
    const int nd = static_cast<int>(defs.size());
    if (nd == 0)
        return {};

    std::vector<NodeSet> gen(n, NodeSet(nd)), kill(n, NodeSet(nd));
    for (int d = 0; d < nd; ++d) {
        gen[defs[d].node].set(d);
        for (int other : defs_of_var[defs[d].var])
            if (other != d)
                kill[defs[d].node].set(other);
    }

    std::vector<NodeSet> in(n, NodeSet(nd)), out(n, NodeSet(nd));
    std::deque<int> work;
    std::vector<char> queued(n, 1);
    for (int v = 0; v < n; ++v)
        work.push_back(v);
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        queued[v] = 0;
        NodeSet new_in(nd);
        for (int p : g.pred[v])
            new_in.unite_with(out[p]);
        in[v] = new_in;
        NodeSet new_out = new_in;
        for (int d = 0; d < nd; ++d)
            if (kill[v].test(d))
                new_out.clear(d);
        new_out.unite_with(gen[v]);
        if (!(new_out == out[v])) {
            out[v] = new_out;
            for (int s : g.succ[v])
                if (!queued[s]) {
                    queued[s] = 1;
                    work.push_back(s);
                }
        }
    }

    std::vector<DataDep> edges;
    for (int u = 0; u < n; ++u) {
        for (const auto& var : du[u].uses) {
            auto it = defs_of_var.find(var);
            if (it == defs_of_var.end())
                continue;
            for (int d : it->second)
                if (in[u].test(d))
                    edges.push_back({defs[d].node, u, var});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<DataDep> data_dependence(const Cfg& g, const frontend::FunctionAst& fn) {
    auto du = function_def_use(g, fn);
    du[g.entry()].defs.clear(); // parameter pseudo-defs belong to the PDG link step
    auto edges = reaching_dependence(g, du);
    std::vector<DataDep> out;
    for (auto& e : edges)
        if (e.from < g.n_stmts && e.to < g.n_stmts)
            out.push_back(std::move(e));
    return out;
}

} // namespace vulnrank::graphs

#pragma once

// Brute-force reference implementations for the test and acceptance suites.
// Everything here recomputes results straight from the definitions with
// exhaustive reachability or plain scalar loops, independent of the library
// algorithms under test.

#include <deque>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "vulnrank/graphs/cfg.hpp"
#include "vulnrank/graphs/defuse.hpp"
#include "vulnrank/util/rng.hpp"

namespace testoracle {

using vulnrank::Rng;
using vulnrank::graphs::Cfg;
using vulnrank::graphs::DefUse;

// Can `from` reach `to` following succ edges while never entering a node in
// `blocked`? (`to` itself may be blocked; arrival still counts.)
inline bool reaches_avoiding(const Cfg& g, int from, int to,
                             const std::set<int>& blocked) {
    if (from == to)
        return true;
    std::deque<int> work{from};
    std::set<int> seen{from};
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (int s : g.succ[v]) {
            if (s == to)
                return true;
            if (blocked.count(s) || seen.count(s))
                continue;
            seen.insert(s);
            work.push_back(s);
        }
    }
    return false;
}

// b post-dominates a iff every a -> exit path passes through b, i.e. a
// cannot reach exit once b is removed.
inline bool postdominates(const Cfg& g, int b, int a) {
    if (a == b)
        return true;
    return !reaches_avoiding(g, a, g.exit(), {b});
}

// Control dependence from the definition: a has a successor s with b
// post-dominating s, and b does not strictly post-dominate a.
inline std::set<std::pair<int, int>> control_dep_oracle(const Cfg& g) {
    std::set<std::pair<int, int>> out;
    for (int a = 0; a < g.n_stmts; ++a) {
        if (g.succ[a].size() < 2)
            continue;
        for (int s : g.succ[a])
            for (int b = 0; b < g.n_stmts; ++b) {
                if (!postdominates(g, b, s))
                    continue;
                const bool strictly_pdoms_a = b != a && postdominates(g, b, a);
                if (!strictly_pdoms_a)
                    out.insert({a, b});
            }
    }
    return out;
}

// Def at d reaches the use at u iff some path d -> ... -> u keeps every
// intermediate node free of defs of the variable.
inline std::set<std::tuple<int, int, std::string>>
reaching_oracle(const Cfg& g, const std::vector<DefUse>& du) {
    std::set<std::tuple<int, int, std::string>> out;
    for (int d = 0; d < g.n_nodes(); ++d) {
        for (const auto& var : du[d].defs) {
            std::set<int> blocked;
            for (int w = 0; w < g.n_nodes(); ++w)
                for (const auto& dv : du[w].defs)
                    if (dv == var)
                        blocked.insert(w);
            for (int u = 0; u < g.n_nodes(); ++u) {
                bool uses = false;
                for (const auto& uv : du[u].uses)
                    if (uv == var)
                        uses = true;
                if (!uses)
                    continue;
                // Walk from d's successors; d itself and u never block.
                std::set<int> blk = blocked;
                blk.erase(u);
                bool found = false;
                for (int s : g.succ[d]) {
                    if (s == u || (!blk.count(s) && reaches_avoiding(g, s, u, blk))) {
                        found = true;
                        break;
                    }
                }
                if (found)
                    out.insert({d, u, var});
            }
        }
    }
    return out;
}

// Random CFG: every statement node gets one or two successors; finalize()
// patches exit reachability the same way the library does for real graphs.
inline Cfg random_cfg(Rng& rng, int max_stmts) {
    const int n = static_cast<int>(rng.range(1, max_stmts));
    std::vector<vulnrank::graphs::CfgEdge> edges;
    const int exit = n + 1;
    const int entry = n;
    edges.push_back({entry, static_cast<int>(rng.below(static_cast<uint64_t>(n))),
                     vulnrank::graphs::EdgeTag::None});
    for (int v = 0; v < n; ++v) {
        auto target = [&]() {
            int t = static_cast<int>(rng.below(static_cast<uint64_t>(n + 1)));
            return t == n ? exit : t;
        };
        if (rng.chance(0.4)) {
            edges.push_back({v, target(), vulnrank::graphs::EdgeTag::True});
            edges.push_back({v, target(), vulnrank::graphs::EdgeTag::False});
        } else {
            edges.push_back({v, target(), vulnrank::graphs::EdgeTag::None});
        }
    }
    return vulnrank::graphs::make_raw_cfg(n, edges);
}

// Plain adjacency BFS over an arbitrary edge list (merged-graph slicing
// oracle).
inline std::set<int> bfs_reach(int n_nodes, const std::vector<std::pair<int, int>>& edges,
                               int start, bool forward) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_nodes));
    for (auto [a, b] : edges) {
        if (forward)
            adj[static_cast<size_t>(a)].push_back(b);
        else
            adj[static_cast<size_t>(b)].push_back(a);
    }
    std::set<int> seen{start};
    std::deque<int> work{start};
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (int s : adj[static_cast<size_t>(v)])
            if (!seen.count(s)) {
                seen.insert(s);
                work.push_back(s);
            }
    }
    return seen;
}

// Scalar-loop BiGRU reference, plain vectors end to end.
struct GruRefDir {
    std::vector<std::vector<double>> wz, wr, wh; // in x h
    std::vector<std::vector<double>> uz, ur, uh; // h x h
    std::vector<double> bz, br, bh;              // h
};

inline std::vector<std::vector<double>>
gru_dir_reference(const std::vector<std::vector<double>>& x, const GruRefDir& p,
                  bool forward_dir) {
    const size_t l = x.size();
    const size_t in = x.empty() ? 0 : x[0].size();
    const size_t h = p.bz.size();
    auto sigma = [](double v) { return 1.0 / (1.0 + std::exp(-v)); };

    std::vector<std::vector<double>> states(l, std::vector<double>(h, 0.0));
    std::vector<double> hprev(h, 0.0);
    for (size_t step = 0; step < l; ++step) {
        const size_t t = forward_dir ? step : l - 1 - step;
        std::vector<double> z(h), r(h), hc(h), hnew(h);
        for (size_t j = 0; j < h; ++j) {
            double az = p.bz[j], ar = p.br[j];
            for (size_t i = 0; i < in; ++i) {
                az += x[t][i] * p.wz[i][j];
                ar += x[t][i] * p.wr[i][j];
            }
            for (size_t i = 0; i < h; ++i) {
                az += hprev[i] * p.uz[i][j];
                ar += hprev[i] * p.ur[i][j];
            }
            z[j] = sigma(az);
            r[j] = sigma(ar);
        }
        for (size_t j = 0; j < h; ++j) {
            double ah = p.bh[j];
            for (size_t i = 0; i < in; ++i)
                ah += x[t][i] * p.wh[i][j];
            for (size_t i = 0; i < h; ++i)
                ah += (r[i] * hprev[i]) * p.uh[i][j];
            hc[j] = std::tanh(ah);
            hnew[j] = (1.0 - z[j]) * hprev[j] + z[j] * hc[j];
        }
        states[t] = hnew;
        hprev = hnew;
    }
    return states;
}

inline std::vector<std::vector<double>>
bigru_reference(const std::vector<std::vector<double>>& x, const GruRefDir& fwd,
                const GruRefDir& bwd) {
    auto f = gru_dir_reference(x, fwd, true);
    auto b = gru_dir_reference(x, bwd, false);
    std::vector<std::vector<double>> out(x.size());
    for (size_t t = 0; t < x.size(); ++t) {
        out[t] = f[t];
        out[t].insert(out[t].end(), b[t].begin(), b[t].end());
    }
    return out;
}

} // namespace testoracle

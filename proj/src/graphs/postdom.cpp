#include "vulnrank/graphs/postdom.hpp"

#include <deque>

#include "vulnrank/util/error.hpp"

namespace vulnrank::graphs {

std::vector<NodeSet> postdom_sets(const Cfg& g) {
    const int n = g.n_nodes();
    const int exit = g.exit();

    {
        std::vector<char> seen(n, 0);
        std::deque<int> work{exit};
        seen[exit] = 1;
        while (!work.empty()) {
            int v = work.front();
            work.pop_front();
            for (int p : g.pred[v])
                if (!seen[p]) {
                    seen[p] = 1;
                    work.push_back(p);
                }
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v])
                throw GraphError("node " + std::to_string(v) + " cannot reach exit");
    }

    std::vector<NodeSet> pdom(n, NodeSet(n, true));
    pdom[exit] = NodeSet(n);
    pdom[exit].set(exit);

    bool changed = true;
    while (changed) {
        changed = false;
        // Reverse node order converges quickly on structured graphs.
        for (int v = n - 1; v >= 0; --v) {
            if (v == exit)
                continue;
            NodeSet next(n, true);
            for (int s : g.succ[v])
                next.intersect_with(pdom[s]);
            next.set(v);
            if (!(next == pdom[v])) {
                pdom[v] = next;
                changed = true;
            }
        }
    }
    return pdom;
}

std::vector<int> post_dominators(const Cfg& g, const std::vector<NodeSet>& pdom) {
    const int n = g.n_nodes();
    const int exit = g.exit();
    std::vector<int> ipdom(n, exit);
    ipdom[exit] = exit;
    for (int v = 0; v < n; ++v) {
        if (v == exit)
            continue;
        // The strict post-dominators of v form a chain; the immediate one is
        // the chain element with the largest own pdom set.
        int best = -1, best_count = -1;
        for (int c = 0; c < n; ++c) {
            if (c == v || !pdom[v].test(c))
                continue;
            int cc = pdom[c].count();
            if (cc > best_count) {
                best_count = cc;
                best = c;
            }
        }
        ipdom[v] = best;
    }
    return ipdom;
}

std::vector<int> post_dominators(const Cfg& g) {
    return post_dominators(g, postdom_sets(g));
}

} // namespace vulnrank::graphs

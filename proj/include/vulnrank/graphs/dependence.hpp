#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vulnrank/graphs/cfg.hpp"
#include "vulnrank/graphs/defuse.hpp"
#include "vulnrank/graphs/postdom.hpp"

namespace vulnrank::graphs {

struct DataDep {
    int from, to;
    std::string var;

    bool operator==(const DataDep& o) const {
        return from == o.from && to == o.to && var == o.var;
    }
    bool operator<(const DataDep& o) const {
        return std::tie(from, to, var) < std::tie(o.from, o.to, o.var);
    }
};

// B is control-dependent on A iff A has a successor s with B post-dominating
// s and B not strictly post-dominating A (a loop header may govern itself).
// Returned pairs are governor -> dependent over statement nodes, sorted.
std::vector<std::pair<int, int>> control_dependence(const Cfg& g);
std::vector<std::pair<int, int>> control_dependence(const Cfg& g,
                                                    const std::vector<NodeSet>& pdom);

// Reaching-definitions def->use edges over arbitrary node def/use tables
// (entry pseudo-defs included when present in the table). Sorted.
std::vector<DataDep> reaching_dependence(const Cfg& g, const std::vector<DefUse>& du);

// Statement-to-statement data dependence for a parsed function.
std::vector<DataDep> data_dependence(const Cfg& g, const frontend::FunctionAst& fn);

} // namespace vulnrank::graphs

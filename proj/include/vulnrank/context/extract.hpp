#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vulnrank/context/document.hpp"
#include "vulnrank/context/warning.hpp"
#include "vulnrank/frontend/ast.hpp"
#include "vulnrank/graphs/pdg.hpp"

namespace vulnrank::context {

struct AnalyzedUnit {
    frontend::TranslationUnit unit;
    graphs::LinkedProgram prog;
};

AnalyzedUnit analyze(std::string source);

// Maps a warning's line to the statement it names. Throws UnresolvedLocus.
int resolve_locus(const AnalyzedUnit& au, const std::string& file, int line);

// Transitive dependence reachability over the merged graph (control, data,
// parameter-binding, call and return links). Results are sorted statement
// gids and always contain the criterion.
std::vector<int> backward_slice(const graphs::LinkedProgram& prog, int criterion);
std::vector<int> forward_slice(const graphs::LinkedProgram& prog, int criterion);

// Statements of one function in control-flow order: reverse post-order from
// entry (true branches first), loop bodies once; statements the walk cannot
// reach are appended in id order so the set stays complete.
std::vector<int> control_flow_order(const graphs::Cfg& cfg);

ContextDocument extract_slice_context(const AnalyzedUnit& au, int warned_gid);
ContextDocument extract_gadget(const AnalyzedUnit& au, int warned_gid);

} // namespace vulnrank::context

#pragma once

#include <string>
#include <vector>

#include "vulnrank/context/warning.hpp"

namespace vulnrank::context {

enum class DocVariant { Slice, Gadget };

struct DocStatement {
    int func = -1; // function index within the unit
    int stmt = -1; // StatementId within the function
    int line = 0, col = 0;
    bool warned = false;
    std::string text;
};

// Ordered statement sequence extracted for one warning. The slice variant
// is ordered by source position; the gadget variant by control-flow order.
struct ContextDocument {
    DocVariant variant = DocVariant::Slice;
    std::vector<DocStatement> statements;
    size_t origin = 0; // index of the owning warning in the dataset
};

// One statement per line, for the CLI debug dump.
std::string document_to_text(const ContextDocument& doc);

} // namespace vulnrank::context

#pragma once

#include <string>
#include <vector>

#include "vulnrank/context/document.hpp"
#include "vulnrank/textpipe/config.hpp"

namespace vulnrank::textpipe {

// Removes comments and turns tab/backslash/end-of-line characters into
// spaces; runs of whitespace collapse to one space.
std::string preprocess_text(const std::string& text);
context::ContextDocument preprocess(const context::ContextDocument& doc);

// Replaces user identifiers and constants with FUNCi/VARi/LITERALi.
// Indices are assigned by first occurrence within one document; identical
// lexemes share an index; keywords, operators and punctuation pass through.
context::ContextDocument abstract_identifiers(
    const context::ContextDocument& doc,
    const std::vector<std::string>& keep_functions = {});

} // namespace vulnrank::textpipe

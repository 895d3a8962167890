#pragma once

#include <string>
#include <vector>

#include "vulnrank/frontend/ast.hpp"
#include "vulnrank/frontend/token.hpp"

namespace vulnrank::frontend {

// Recursive-descent parser for the mini-C subset:
//   functions, int/char scalars, one pointer level, fixed-size arrays,
//   assignment, arithmetic/relational/logical/unary(* & ! -) expressions,
//   calls, indexing, if/else (else binds to the nearest if), while, for,
//   return, block-local declarations.
// No structs, typedefs, preprocessor, or varargs.
TranslationUnit parse(std::vector<Token> tokens, std::string source);

// Convenience: lex + parse.
TranslationUnit parse_source(const std::string& source);

} // namespace vulnrank::frontend

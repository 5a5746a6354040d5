#pragma once

#include <string_view>

#include "cmt/formula.hpp"
#include "cmt/vocabulary.hpp"

namespace cmt {

// Both parsers validate every symbol against v (kind and arity) and return the
// normalized formula.  Undeclared identifiers in term position are variables.
// Errors carry a byte offset: syntax errors, unknown symbols, arity
// mismatches, and non-dyadic constant literals.
ContFormula parse_cont_formula(std::string_view text, const Vocabulary& v);
FOFormula parse_fo_formula(std::string_view text, const Vocabulary& v);

}  // namespace cmt

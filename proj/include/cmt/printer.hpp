#pragma once

#include <string>

#include "cmt/formula.hpp"

namespace cmt {

// Canonical text with minimal parentheses.  Rendering a normalized formula
// and parsing it back yields the same tree.
std::string render_formula(const ContFormula& f);
std::string render_formula(const FOFormula& f);
std::string render_term(const Term& t);
std::string render_connective(const MonotoneConnective& c);

}  // namespace cmt

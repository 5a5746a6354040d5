#pragma once

#include "cmt/formula.hpp"
#include "cmt/structure.hpp"

namespace cmt {

// Exact evaluation.  Sup/Inf range over the whole (finite) universe, so they
// are genuine max/min.  Free variables must be covered by the assignment.
Value eval_formula(const GeneralStructure& m, const ContFormula& f, const Assignment& a = {});
bool eval_formula(const FOStructure& k, const FOFormula& f, const Assignment& a = {});

int eval_term(const GeneralStructure& m, const Term& t, const Assignment& a);
int eval_term(const FOStructure& k, const Term& t, const Assignment& a);

}  // namespace cmt

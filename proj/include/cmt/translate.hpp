#pragma once

#include "cmt/classify.hpp"
#include "cmt/formula.hpp"

namespace cmt {

// Continuous counterpart of an equality-free classical formula, with 0 as
// "true": disjunction becomes min, conjunction max, negation 1 -. x,
// universal quantification sup, existential inf.  On two-valued structures
// the translation evaluates to 0 exactly where the original holds.
// Throws vocab_error on equality nodes.
ContFormula fo_to_cont(const FOFormula& f);

// For conditional f and nondecreasing b, an equivalent conditional form of
// b(f): b moves through max/sup/inf and lands on the unary maps of the
// primitive parts.  Throws vocab_error when f is not conditional.
ContFormula push_unary(const MonotoneConnective& b, const ContFormula& f);

// One-variable formula A over the restricted connective set (dyadic
// constants, min, max, -., +., half) with |A(x) - c(x)| <= eps everywhere;
// the variable is a 0-ary predicate named hole.  A never overshoots c.
// Exactly representable maps (identity, u -. t, u +. t, half, dyadic
// constants) come back exact regardless of eps.
ContFormula approx_restricted(const MonotoneConnective& c, Value eps, const std::string& hole = "u");

// substitute arg for every occurrence of the 0-ary predicate named hole
ContFormula instantiate(const ContFormula& tmpl, const std::string& hole, const ContFormula& arg);

// evaluate a formula whose only predicate is the 0-ary hole at hole := x
Value eval_unary_template(const ContFormula& tmpl, const std::string& hole, Value x);

}  // namespace cmt

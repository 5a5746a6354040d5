#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmt/connective.hpp"
#include "cmt/value.hpp"

namespace cmt {

struct Term {
  enum class Kind { variable, constant, apply };
  Kind kind = Kind::variable;
  std::string name;        // variable, constant or function symbol
  std::vector<Term> args;  // apply only

  bool operator==(const Term& o) const;
};

Term tvar(std::string name);
Term tconst(std::string name);
Term tapp(std::string fn, std::vector<Term> args);
int compare(const Term& a, const Term& b);
void collect_term_vars(const Term& t, std::set<std::string>& out);

// Formula of continuous logic, valued in [0,1] with 0 as "true".
// Min/Max are n-ary; TruncSub(l,r) is l -. r; Apply wraps a monotone
// piecewise-linear connective.  Sup/Inf bind one variable.
struct ContFormula {
  enum class Kind { atomic, constant, min, max, trunc_sub, trunc_add, half, apply, sup, inf };
  Kind kind = Kind::constant;

  std::string pred;                         // atomic
  std::vector<Term> args;                   // atomic
  Value value;                              // constant (always dyadic)
  std::optional<MonotoneConnective> conn;   // apply
  std::string var;                          // sup/inf
  std::vector<ContFormula> children;

  bool operator==(const ContFormula& o) const;
};

namespace cf {
ContFormula atomic(std::string pred, std::vector<Term> args = {});
ContFormula constant(Value v);
ContFormula min(std::vector<ContFormula> children);
ContFormula max(std::vector<ContFormula> children);
ContFormula sub(ContFormula l, ContFormula r);
ContFormula add(ContFormula l, ContFormula r);
ContFormula half(ContFormula child);
ContFormula apply(MonotoneConnective c, ContFormula child);
ContFormula sup(std::string var, ContFormula body);
ContFormula inf(std::string var, ContFormula body);
ContFormula negate(ContFormula child);  // 1 -. child
}  // namespace cf

int compare(const ContFormula& a, const ContFormula& b);
std::set<std::string> free_vars(const ContFormula& f);
bool is_sentence(const ContFormula& f);

// Canonical form: children normalized, nested Min/Max flattened, children of
// Min/Max sorted and deduplicated, dyadic constants folded, identity
// connectives and vacuous quantifiers dropped, nested Apply composed.
ContFormula normalize(const ContFormula& f);

// Classical first-order formula over the same signatures, with equality.
struct FOFormula {
  enum class Kind { atomic, equal, lnot, land, lor, forall, exists };
  Kind kind = Kind::atomic;

  std::string pred;        // atomic
  std::vector<Term> args;  // atomic: arguments; equal: exactly two terms
  std::string var;         // forall/exists
  std::vector<FOFormula> children;

  bool operator==(const FOFormula& o) const;
};

namespace fo {
FOFormula atomic(std::string pred, std::vector<Term> args = {});
FOFormula equal(Term l, Term r);
FOFormula lnot(FOFormula child);
FOFormula land(std::vector<FOFormula> children);
FOFormula lor(std::vector<FOFormula> children);
FOFormula forall(std::string var, FOFormula body);
FOFormula exists(std::string var, FOFormula body);
}  // namespace fo

int compare(const FOFormula& a, const FOFormula& b);
std::set<std::string> free_vars(const FOFormula& f);
bool is_sentence(const FOFormula& f);
FOFormula normalize(const FOFormula& f);

}  // namespace cmt

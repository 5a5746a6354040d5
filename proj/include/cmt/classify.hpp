#pragma once

#include <map>
#include <optional>
#include <string>

#include "cmt/formula.hpp"

namespace cmt {

// One building block of a primitive conditional: an optional nondecreasing
// unary map around either an atomic, a negated atomic (1 -. atomic), or a
// bare constant.  Sugar (-. const, +. const, half) counts toward the map.
struct PrimitivePart {
  std::optional<MonotoneConnective> outer;  // nullopt = identity
  ContFormula leaf;                         // atomic, 1 -. atomic, or constant
  bool negated = false;
  bool constant = false;
};

// Decompose a normalized formula as min of such parts with at most one
// non-negated atomic slot; nullopt when the shape does not match.
std::optional<std::vector<PrimitivePart>> match_primitive_conditional(const ContFormula& f);

// Purely syntactic judgments on the normalized tree.  For each flag that is
// false, witnesses[flag] holds the path of the first offending node, as
// child indices from the root, e.g. "/1/0 (trunc_add)".
struct ContClassification {
  bool quantifier_free = false;
  bool restricted = false;
  bool primitive_conditional = false;
  bool conditional = false;
  bool existential = false;
  bool universal = false;
  bool positive = false;
  std::map<std::string, std::string> witnesses;
};

ContClassification classify_cont(const ContFormula& f);

struct HornClassification {
  bool basic_horn = false;
  bool horn = false;
  std::map<std::string, std::string> witnesses;
};

HornClassification classify_horn(const FOFormula& f);

}  // namespace cmt

#pragma once

#include <optional>
#include <string>

#include "cmt/structure.hpp"

namespace cmt {

enum class MorphismKind { embedding, homomorphism };

struct MorphismReport {
  bool ok = false;
  std::string violation;  // description of the first failure, empty when ok
};

// h maps elements of m into n.  An embedding preserves every predicate value
// exactly and commutes with functions and constants; it need not be injective
// or onto (a quotient map is an embedding onto its image).  A homomorphism
// must be onto and may only decrease predicate values: P(a...) in m is >= the
// value at the image tuple in n.
MorphismReport check_morphism(const GeneralStructure& m, const GeneralStructure& n, const std::vector<int>& h,
                              MorphismKind kind);

// Bijection between the reductions of m and n under which all tables agree.
// Both inputs are reduced internally first; the returned map is between the
// reduced universes.  Backtracking with per-element value-multiset pruning.
std::optional<std::vector<int>> find_isomorphism(const GeneralStructure& m, const GeneralStructure& n);

}  // namespace cmt

#pragma once

#include <utility>

#include "cmt/structure.hpp"

namespace cmt {

struct QuotientMap {
  std::vector<int> block_of;             // element -> block id
  std::vector<std::vector<int>> blocks;  // block id -> members, ascending
  int representative(int block) const { return blocks[block][0]; }
  bool discrete() const { return blocks.size() == block_of.size(); }
};

// Partition of the universe into classes of pairwise indiscernible elements:
// a and b fall in one class iff every atomic formula with one distinguished
// variable and arbitrary parameters takes the same value at a and b.
QuotientMap leibniz_partition(const GeneralStructure& m);

// Quotient by the partition above.  The induced map onto the quotient
// preserves all formula values.  Throws internal_error if the tables are not
// constant on classes (which would mean leibniz_partition is broken).
std::pair<GeneralStructure, QuotientMap> reduce_structure(const GeneralStructure& m);

bool is_reduced(const GeneralStructure& m);

}  // namespace cmt

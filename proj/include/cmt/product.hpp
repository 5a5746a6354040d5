#pragma once

#include "cmt/filter.hpp"
#include "cmt/leibniz.hpp"
#include "cmt/structure.hpp"

namespace cmt {

// Finitely many structures over one vocabulary, indexed 0..k-1.
class IndexedFamily {
 public:
  explicit IndexedFamily(std::vector<GeneralStructure> factors);

  const std::vector<GeneralStructure>& factors() const { return factors_; }
  const GeneralStructure& factor(int i) const { return factors_[i]; }
  int size() const { return (int)factors_.size(); }
  const VocabPtr& vocab_ptr() const { return factors_[0].vocab_ptr(); }

  size_t universe_size() const;  // product of the factor universes
  // product element <-> per-factor coordinates (factor 0 varies fastest)
  std::vector<int> coords(size_t element) const;
  size_t element(const std::vector<int>& coords) const;

 private:
  std::vector<GeneralStructure> factors_;
};

struct ProductOptions {
  size_t max_universe = 4096;
  // The predicate tables are filled row-parallel with OpenMP by default; the
  // serial path is kept as a reference and must produce identical tables.
  bool parallel = true;
};

// Product structure on the full cartesian universe: functions and constants
// act coordinatewise, a predicate value is the limsup along f of the
// coordinate values.  Throws size_error when the universe exceeds the bound.
GeneralStructure pre_reduced_product(const IndexedFamily& fam, const Filter& f, const ProductOptions& opts = {});

// The pre-reduced product followed by its quotient; the quotient map sends a
// product element to its class.
std::pair<GeneralStructure, QuotientMap> reduced_product(const IndexedFamily& fam, const Filter& f,
                                                         const ProductOptions& opts = {});

// Classical reduced product: the cartesian product quotiented by agreement on
// a filter member.  Two tuples collapse iff they agree on the kernel, so the
// quotient is materialized directly as the space of kernel-coordinate tuples.
// An atomic holds iff the set of coordinates where it holds is in the filter.
FOStructure fo_reduced_product(const std::vector<FOStructure>& factors, const Filter& f,
                               const ProductOptions& opts = {});

// class of a full coordinate tuple in the classical reduced product
size_t fo_class_index(const std::vector<FOStructure>& factors, const Filter& f, const std::vector<int>& coords);

}  // namespace cmt

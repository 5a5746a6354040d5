#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmt/filter.hpp"
#include "cmt/formula.hpp"
#include "cmt/gen.hpp"
#include "cmt/leibniz.hpp"
#include "cmt/product.hpp"
#include "cmt/structure.hpp"

namespace cmt {

// One preservation check: does the truth of phi (up to eps) along the filter
// carry over to the reduced product?
struct PreservationTrial {
  std::uint64_t seed = 0;
  std::vector<Value> factor_values;
  std::vector<int> kernel;
  Value eps;
  Value product_value;
  bool hypothesis = false;  // {i : factor value <= eps} belongs to the filter
  bool violated = false;    // hypothesis held, yet product value > eps
};

PreservationTrial check_preservation(const IndexedFamily& fam, const Filter& f, const ContFormula& phi, Value eps,
                                     const ProductOptions& opts = {});

// For conditional sentences the product value never exceeds the worst factor
// value on the kernel; this computes both sides exactly.
struct LimsupBound {
  Value product_value;
  Value kernel_max;
  bool ok = false;
};

LimsupBound check_limsup_bound(const IndexedFamily& fam, const Filter& f, const ContFormula& phi,
                               const ProductOptions& opts = {});

struct CounterexampleWitness {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<GeneralStructure> factors;
  Filter filter;
  Value eps;
  std::vector<Value> factor_values;
  Value product_value;
};

// Seeded search for a family, filter and eps violating preservation of phi.
// Scans budget.trials instances drawn over phi's vocabulary; eps ranges over
// the grid points and the exact factor values.  Deterministic in
// budget.seed; returns the first hit in trial order.
std::optional<CounterexampleWitness> search_counterexample(VocabPtr vocab, const ContFormula& phi,
                                                           const InstanceSpec& budget);

// The two-point family where P and Q swap the values r and 0 across the
// factors.  The translated tautology P | Q | ~(P | Q) holds in both factors
// but takes value exactly r in the direct product, so preservation fails at
// eps = 0 whenever 0 < r <= 1/2.
VocabPtr example_vocabulary();
ContFormula example_sentence();

struct ExampleReproduction {
  Value r;
  Value factor_value_1, factor_value_2;
  Value product_value;
  bool violated_at_zero = false;
};

ExampleReproduction reproduce_example(Value r);

// Leibniz partition computed the slow definitional way: enumerate all term
// functions of one variable (with parameters) up to the given depth, then
// split elements by every atomic value profile over those terms.  Ground
// truth for the fixpoint refinement at small scale.
QuotientMap leibniz_bruteforce(const GeneralStructure& m, int max_term_depth);

// Induced substructure on the closure of a random subset (plus constants)
// under functions; second component maps substructure elements into m.
std::pair<GeneralStructure, std::vector<int>> gen_substructure(Rng& rng, const GeneralStructure& m);

// Random onto homomorphism source: a structure of the given size together
// with a surjection h onto n's universe such that functions commute and
// every predicate value at a tuple dominates n's value at the image tuple.
std::pair<GeneralStructure, std::vector<int>> gen_hom_source(Rng& rng, const GeneralStructure& n, int size, Grid g);

struct SuiteOptions {
  InstanceSpec spec;
  bool parallel = true;
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
  std::string report_json;  // stable field order, no timestamp
};

// limsup-identity | los | leibniz-oracle | conditional-preservation |
// basic-lemma | downup-roundtrip | product-commutation |
// morphism-monotonicity | example-reproduction
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace cmt

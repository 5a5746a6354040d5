#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmt/connective.hpp"
#include "cmt/downup.hpp"
#include "cmt/filter.hpp"
#include "cmt/formula.hpp"
#include "cmt/rng.hpp"
#include "cmt/structure.hpp"

namespace cmt {

enum class FormulaClass {
  full,             // every node kind
  quantifier_free,  // no sup/inf
  restricted,       // no connective literals
  conditional,      // max/sup/inf over primitive conditionals
  horn,             // equality-free Horn sentence, translated
  existential,
  universal,
  positive,
};

const char* to_string(FormulaClass c);
std::optional<FormulaClass> formula_class_from_string(std::string_view s);

// Knobs for one seeded test instance.  Everything downstream is a pure
// function of these fields, so a report line that names a seed replays.
struct InstanceSpec {
  int predicates = 2;  // named P0..; arities drawn from 0..max_pred_arity
  int max_pred_arity = 1;
  int functions = 1;  // named F0..; arities 1..max_fun_arity
  int max_fun_arity = 1;
  int constants = 1;  // named c0..
  int min_universe = 1;
  int max_universe = 3;
  int max_index = 3;  // index set size drawn from 1..max_index
  int grid_k = 3;
  FormulaClass formula_class = FormulaClass::conditional;
  int depth = 4;
  int max_quantifiers = 2;
  int free_variables = 0;  // v0.. usable unbound, for open-formula trials
  std::string filter_spec;  // empty = random; else parsed per parse_filter_spec
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::size_t max_product_size = 4096;
};

// throws vocab_error when no instance can satisfy these parameters
void validate(const InstanceSpec& spec);

struct Instance {
  VocabPtr vocab;
  std::vector<GeneralStructure> factors;
  Filter filter;
  ContFormula formula;
};

VocabPtr gen_vocabulary(Rng& rng, const InstanceSpec& spec);
GeneralStructure gen_structure(Rng& rng, VocabPtr v, int universe, Grid g);
// two-valued structure over vocab_down(v, g); increasing by construction
FOStructure gen_threshold_structure(Rng& rng, VocabPtr v, int universe, Grid g);
Filter gen_filter(Rng& rng, int index_size);
// factors plus filter for a fixed vocabulary; the formula is the caller's
std::pair<std::vector<GeneralStructure>, Filter> gen_family(Rng& rng, VocabPtr v, const InstanceSpec& spec);
MonotoneConnective gen_connective(Rng& rng, Grid g);
// sentence (plus spec.free_variables free variables) in the requested class
ContFormula gen_formula(Rng& rng, const Vocabulary& v, const InstanceSpec& spec);
FOFormula gen_horn_sentence(Rng& rng, const Vocabulary& v, const InstanceSpec& spec);

Instance gen_instance(const InstanceSpec& spec);

}  // namespace cmt

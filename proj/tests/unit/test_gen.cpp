#include <doctest.h>

#include "cmt/classify.hpp"
#include "cmt/downup.hpp"
#include "cmt/errors.hpp"
#include "cmt/gen.hpp"
#include "cmt/printer.hpp"
#include "cmt/translate.hpp"

using namespace cmt;

TEST_CASE("one seed, one instance") {
  InstanceSpec spec;
  spec.seed = 99;
  Instance a = gen_instance(spec);
  Instance b = gen_instance(spec);
  CHECK(a.formula == b.formula);
  CHECK(a.filter == b.filter);
  REQUIRE(a.factors.size() == b.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].universe() == b.factors[i].universe());
    for (int p = 0; p < (int)a.vocab->predicates().size(); ++p)
      CHECK(a.factors[i].pred_table(p) == b.factors[i].pred_table(p));
  }
  spec.seed = 100;
  Instance c = gen_instance(spec);
  CHECK((render_formula(a.formula) != render_formula(c.formula) ||
         a.factors[0].pred_table(0) != c.factors[0].pred_table(0)));
}

TEST_CASE("every generated value sits on the grid") {
  InstanceSpec spec;
  spec.grid_k = 2;
  Grid g(2);
  for (std::uint64_t s = 0; s < 50; ++s) {
    spec.seed = s;
    Instance inst = gen_instance(spec);
    for (const auto& m : inst.factors)
      for (int p = 0; p < (int)inst.vocab->predicates().size(); ++p)
        for (const Value& val : m.pred_table(p)) CHECK(g.admits(val));
  }
}

TEST_CASE("the requested formula class is what comes out") {
  InstanceSpec spec;
  for (std::uint64_t s = 0; s < 40; ++s) {
    spec.seed = s;
    spec.formula_class = FormulaClass::conditional;
    CHECK(classify_cont(gen_instance(spec).formula).conditional);
    spec.formula_class = FormulaClass::quantifier_free;
    CHECK(classify_cont(gen_instance(spec).formula).quantifier_free);
    spec.formula_class = FormulaClass::restricted;
    CHECK(classify_cont(gen_instance(spec).formula).restricted);
    spec.formula_class = FormulaClass::existential;
    CHECK(classify_cont(gen_instance(spec).formula).existential);
    spec.formula_class = FormulaClass::universal;
    CHECK(classify_cont(gen_instance(spec).formula).universal);
    spec.formula_class = FormulaClass::positive;
    CHECK(classify_cont(gen_instance(spec).formula).positive);
  }
}

TEST_CASE("generated formulas are sentences unless free variables are requested") {
  InstanceSpec spec;
  spec.formula_class = FormulaClass::full;
  for (std::uint64_t s = 0; s < 40; ++s) {
    spec.seed = s;
    spec.free_variables = 0;
    CHECK(is_sentence(gen_instance(spec).formula));
    spec.free_variables = 2;
    auto fv = free_vars(gen_instance(spec).formula);
    for (const auto& x : fv) CHECK((x == "v0" || x == "v1"));
  }
}

TEST_CASE("generated Horn sentences really are Horn, and translate") {
  InstanceSpec spec;
  spec.formula_class = FormulaClass::horn;
  for (std::uint64_t s = 0; s < 40; ++s) {
    spec.seed = s;
    Rng rng(derive_seed(spec.seed, 7));
    VocabPtr v = gen_vocabulary(rng, spec);
    FOFormula h = gen_horn_sentence(rng, *v, spec);
    CHECK(classify_horn(h).horn);
    CHECK(is_sentence(h));
    ContFormula c = fo_to_cont(h);  // must not hit an equality node
    CHECK(is_sentence(c));
  }
}

TEST_CASE("families respect the product size cap") {
  InstanceSpec spec;
  spec.max_universe = 5;
  spec.max_index = 4;
  spec.max_product_size = 16;
  for (std::uint64_t s = 0; s < 50; ++s) {
    spec.seed = s;
    Instance inst = gen_instance(spec);
    size_t prod = 1;
    for (const auto& m : inst.factors) prod *= (size_t)m.universe();
    CHECK(prod <= 16);
    CHECK(inst.filter.index_size() == (int)inst.factors.size());
  }
}

TEST_CASE("filter specs in the instance spec override the random draw") {
  InstanceSpec spec;
  spec.max_index = 3;
  spec.filter_spec = "kernel=0";
  for (std::uint64_t s = 0; s < 10; ++s) {
    spec.seed = s;
    Instance inst = gen_instance(spec);
    CHECK(inst.filter.kernel() == std::vector<int>{0});
  }
}

TEST_CASE("threshold structures come out increasing") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P", 1);
  v->add_predicate("R", 2);
  v->add_function("F", 1);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    FOStructure k = gen_threshold_structure(rng, v, 1 + rng.below(3), Grid(2));
    CHECK(is_increasing(k));
    CHECK(threshold_info(k.vocab()).k == 2);
  }
}

TEST_CASE("generated connectives are well formed on the grid") {
  Rng rng(17);
  Grid g(3);
  for (int t = 0; t < 50; ++t) {
    MonotoneConnective c = gen_connective(rng, g);
    Value prev = c.eval(Value::zero());
    for (long long j = 1; j <= 8; ++j) {
      Value cur = c.eval(Value::of(j, 8));
      CHECK(prev <= cur);
      prev = cur;
    }
  }
}

TEST_CASE("impossible specs are refused up front") {
  InstanceSpec spec;
  spec.predicates = 0;
  CHECK_THROWS_AS(validate(spec), vocab_error);

  spec = InstanceSpec{};
  spec.min_universe = 3;
  spec.max_universe = 2;
  CHECK_THROWS_AS(validate(spec), vocab_error);

  spec = InstanceSpec{};
  spec.max_index = 0;
  CHECK_THROWS_AS(validate(spec), vocab_error);

  spec = InstanceSpec{};
  spec.grid_k = 0;
  CHECK_THROWS_AS(validate(spec), vocab_error);

  spec = InstanceSpec{};
  spec.depth = -1;
  CHECK_THROWS_AS(validate(spec), vocab_error);
}

TEST_CASE("class names round trip") {
  for (FormulaClass c : {FormulaClass::full, FormulaClass::quantifier_free, FormulaClass::restricted,
                         FormulaClass::conditional, FormulaClass::horn, FormulaClass::existential,
                         FormulaClass::universal, FormulaClass::positive}) {
    auto back = formula_class_from_string(to_string(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK(formula_class_from_string("qf") == FormulaClass::quantifier_free);
  CHECK_FALSE(formula_class_from_string("frobnicated").has_value());
}

TEST_CASE("the raw stream behind the generators is splittable and stable") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
  Rng c(9);
  for (int i = 0; i < 200; ++i) {
    int x = c.below(7);
    CHECK(x >= 0);
    CHECK(x < 7);
  }
}

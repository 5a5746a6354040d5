#include <doctest.h>

#include <stdexcept>

#include "cmt/errors.hpp"
#include "cmt/eval.hpp"
#include "cmt/harness.hpp"
#include "cmt/morphism.hpp"
#include "cmt/parser.hpp"
#include "cmt/printer.hpp"
#include "cmt/translate.hpp"

using namespace cmt;

namespace {

// the two-point family from the golden case: P and Q swap r with 0
IndexedFamily swap_family(Value r) {
  VocabPtr v = example_vocabulary();
  GeneralStructure m1(v, 1), m2(v, 1);
  m1.set_pred(0, {}, r);
  m2.set_pred(1, {}, r);
  return IndexedFamily({m1, m2});
}

}  // namespace

TEST_CASE("the tautology that fails in the product, at both sample rates") {
  for (Value r : {Value::of(1, 4), Value::of(1, 2)}) {
    ExampleReproduction rep = reproduce_example(r);
    CHECK(rep.factor_value_1 == Value::zero());
    CHECK(rep.factor_value_2 == Value::zero());
    CHECK(rep.product_value == r);
    CHECK(rep.violated_at_zero);
  }
  ExampleReproduction trivial = reproduce_example(Value::zero());
  CHECK(trivial.product_value == Value::zero());
  CHECK_FALSE(trivial.violated_at_zero);
}

TEST_CASE("the golden sentence is the translation of P or Q or not (P or Q)") {
  VocabPtr v = example_vocabulary();
  ContFormula via_translation = fo_to_cont(parse_fo_formula("P | Q | ~(P | Q)", *v));
  CHECK(example_sentence() == via_translation);
  CHECK(render_formula(example_sentence()) == "min(P, Q, 1 -. min(P, Q))");
  CHECK_FALSE(classify_cont(example_sentence()).conditional);
}

TEST_CASE("preservation verdicts follow the two-part rule") {
  IndexedFamily fam = swap_family(Value::of(1, 2));
  ContFormula phi = example_sentence();

  PreservationTrial at0 = check_preservation(fam, Filter::full(2), phi, Value::zero());
  CHECK(at0.hypothesis);
  CHECK(at0.product_value == Value::of(1, 2));
  CHECK(at0.violated);
  CHECK(at0.factor_values == std::vector<Value>{Value::zero(), Value::zero()});
  CHECK(at0.kernel == std::vector<int>{0, 1});

  // high enough eps saves the verdict
  CHECK_FALSE(check_preservation(fam, Filter::full(2), phi, Value::of(1, 2)).violated);
  // at an ultrafilter the product agrees with the factor, nothing breaks
  CHECK_FALSE(check_preservation(fam, Filter::principal(2, 0), phi, Value::zero()).violated);

  // when the hypothesis fails the verdict cannot be "violated"
  GeneralStructure loud(example_vocabulary(), 1);
  loud.set_pred(0, {}, Value::of(1, 2));
  loud.set_pred(1, {}, Value::of(1, 2));
  IndexedFamily fam2({loud, loud});
  PreservationTrial t = check_preservation(fam2, Filter::full(2), phi, Value::zero());
  CHECK(t.factor_values[0] == Value::of(1, 2));
  CHECK_FALSE(t.hypothesis);
  CHECK_FALSE(t.violated);

  auto uv = std::make_shared<Vocabulary>();
  uv->add_predicate("U", 1);
  GeneralStructure um(uv, 1);
  IndexedFamily open_family({um, um});
  CHECK_THROWS_AS(
      check_preservation(open_family, Filter::full(2), parse_cont_formula("U(x)", *uv), Value::zero()),
      eval_error);
}

TEST_CASE("conditional sentences never exceed the worst kernel factor") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<GeneralStructure> factors;
    int n = 1 + rng.below(3);
    for (int i = 0; i < n; ++i) factors.push_back(gen_structure(rng, v, 1 + rng.below(3), Grid(3)));
    IndexedFamily fam(std::move(factors));
    Filter f = gen_filter(rng, fam.size());
    ContFormula phi = parse_cont_formula("sup x . (U(x) -. 1/2)", *v);
    LimsupBound b = check_limsup_bound(fam, f, phi);
    CHECK(b.ok);
    CHECK(b.product_value <= b.kernel_max);
    if (f.ultra()) CHECK(b.product_value == b.kernel_max);
  }
  IndexedFamily fam = swap_family(Value::of(1, 2));
  CHECK_THROWS_AS(check_limsup_bound(fam, Filter::full(2), example_sentence()), vocab_error);
}

TEST_CASE("the search finds the known violation and replays it") {
  VocabPtr v = example_vocabulary();
  InstanceSpec budget;
  budget.seed = 0;
  budget.trials = 500;
  budget.max_index = 3;
  budget.max_universe = 2;
  auto w = search_counterexample(v, example_sentence(), budget);
  REQUIRE(w.has_value());

  // the witness must stand on its own feet when recomputed
  IndexedFamily fam(w->factors);
  CHECK(w->filter.index_size() == fam.size());
  std::vector<int> low;
  for (int i = 0; i < fam.size(); ++i) {
    Value vi = eval_formula(fam.factor(i), example_sentence());
    CHECK(vi == w->factor_values[i]);
    if (vi <= w->eps) low.push_back(i);
  }
  CHECK(w->filter.contains(low));
  Value prod = eval_formula(pre_reduced_product(fam, w->filter), example_sentence());
  CHECK(prod == w->product_value);
  CHECK(prod > w->eps);

  auto again = search_counterexample(v, example_sentence(), budget);
  REQUIRE(again.has_value());
  CHECK(again->trial == w->trial);
  CHECK(again->seed == w->seed);

  // a conditional sentence survives the same battering
  auto u = std::make_shared<Vocabulary>();
  u->add_predicate("P", 0);
  InstanceSpec small = budget;
  small.trials = 150;
  CHECK_FALSE(search_counterexample(u, parse_cont_formula("P -. 1/2", *u), small).has_value());
}

TEST_CASE("the slow term-enumeration partition agrees with the fixpoint") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_function("F", 1);
  GeneralStructure m(v, 3);
  m.set_pred(0, {0}, Value::of(1, 2));
  m.set_pred(0, {1}, Value::of(1, 2));
  m.set_pred(0, {2}, Value::of(1, 4));
  m.set_fun(0, {0}, 0);
  m.set_fun(0, {1}, 2);
  m.set_fun(0, {2}, 2);
  QuotientMap fast = leibniz_partition(m);
  QuotientMap slow = leibniz_bruteforce(m, 3);
  CHECK(fast.blocks == slow.blocks);
  CHECK(fast.blocks.size() == 3);

  m.set_fun(0, {1}, 0);  // now no term separates 0 from 1
  CHECK(leibniz_partition(m).blocks == leibniz_bruteforce(m, 3).blocks);
  CHECK(leibniz_partition(m).blocks.size() == 2);
}

TEST_CASE("random substructures embed and random covers map onto") {
  Rng rng(21);
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_predicate("E", 2);
  v->add_function("F", 1);
  v->add_constant("c");
  for (int t = 0; t < 20; ++t) {
    GeneralStructure m = gen_structure(rng, v, 2 + rng.below(3), Grid(3));
    auto [sub, inc] = gen_substructure(rng, m);
    CHECK(sub.universe() >= 1);
    CHECK(sub.universe() <= m.universe());
    CHECK(check_morphism(sub, m, inc, MorphismKind::embedding).ok);

    GeneralStructure n = gen_structure(rng, v, 1 + rng.below(2), Grid(3));
    int size = n.universe() + rng.below(3);
    auto [src, h] = gen_hom_source(rng, n, size, Grid(3));
    CHECK(src.universe() == size);
    CHECK((int)h.size() == size);
    CHECK(check_morphism(src, n, h, MorphismKind::homomorphism).ok);
  }
}

TEST_CASE("suites run, pass, and write replayable reports") {
  CHECK(suite_names().size() == 9);

  SuiteOptions opts;
  opts.spec.trials = 25;
  opts.spec.seed = 5;
  SuiteResult r = run_suite("los", opts);
  CHECK(r.pass);
  CHECK(r.suite == "los");
  CHECK(r.checks == 25);
  CHECK(r.violations == 0);
  CHECK(r.first_violation.empty());
  CHECK(r.report_json.find("\"seed\"") != std::string::npos);

  SuiteResult again = run_suite("los", opts);
  CHECK(again.report_json == r.report_json);

  opts.parallel = false;
  SuiteResult serial = run_suite("los", opts);
  CHECK(serial.report_json == r.report_json);

  CHECK_THROWS_AS(run_suite("nonsense", opts), std::invalid_argument);
}

TEST_CASE("the threshold condition transfers from coordinates to the product") {
  // brute force over a small family of nondecreasing maps and sequences:
  // whenever the combined condition vanishes on a filter member, it vanishes
  // at the limit superior values as well
  std::vector<MonotoneConnective> cs{
      MonotoneConnective::identity(),
      MonotoneConnective::sub_const(Value::of(1, 4)),
      MonotoneConnective::constant(Value::zero()),
      MonotoneConnective({{Value::zero(), Value::zero()},
                          {Value::of(1, 4), Value::one()},
                          {Value::one(), Value::one()}}),
  };
  const int den = 4;
  std::vector<Value> pts;
  for (int j = 0; j <= den; ++j) pts.push_back(Value::of(j, den));

  for (const auto& c0 : cs) {
    for (const auto& c1 : cs) {
      auto cond = [&](Value y0, Value y1) { return vmin(c0.eval(y0), c1.eval(one_minus(y1))); };
      for (const auto& kernel : std::vector<std::vector<int>>{{0}, {1}, {0, 1}}) {
        Filter f(2, kernel);
        for (const Value& a0 : pts)
          for (const Value& a1 : pts)
            for (const Value& b0 : pts)
              for (const Value& b1 : pts) {
                std::vector<Value> y0{a0, b0}, y1{a1, b1};
                std::vector<int> zero_set;
                for (int i = 0; i < 2; ++i)
                  if (cond(y0[i], y1[i]).is_zero()) zero_set.push_back(i);
                if (!f.contains(zero_set)) continue;
                CHECK(cond(limsup(f, y0), limsup(f, y1)).is_zero());
              }
      }
    }
  }
}

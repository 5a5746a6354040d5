#include <doctest.h>

#include "cmt/errors.hpp"
#include "cmt/eval.hpp"
#include "cmt/gen.hpp"
#include "cmt/parser.hpp"
#include "cmt/product.hpp"

using namespace cmt;

namespace {

VocabPtr pq() {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P", 0);
  v->add_predicate("Q", 0);
  return v;
}

GeneralStructure point(VocabPtr v, Value p, Value q) {
  GeneralStructure m(v, 1);
  m.set_pred(0, {}, p);
  m.set_pred(1, {}, q);
  return m;
}

}  // namespace

TEST_CASE("nullary predicates take the kernel maximum") {
  auto v = pq();
  IndexedFamily fam({point(v, Value::of(1, 2), Value::zero()), point(v, Value::zero(), Value::of(1, 2))});
  GeneralStructure full = pre_reduced_product(fam, Filter::full(2));
  CHECK(full.universe() == 1);
  CHECK(full.pred(0, {}) == Value::of(1, 2));
  CHECK(full.pred(1, {}) == Value::of(1, 2));

  GeneralStructure at0 = pre_reduced_product(fam, Filter::principal(2, 0));
  CHECK(at0.pred(0, {}) == Value::of(1, 2));
  CHECK(at0.pred(1, {}) == Value::zero());
}

TEST_CASE("functions and constants act coordinatewise") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_function("F", 1);
  v->add_constant("c");
  GeneralStructure a(v, 2);  // F swaps, c = 0
  a.set_pred(0, {0}, Value::zero());
  a.set_pred(0, {1}, Value::one());
  a.set_fun(0, {0}, 1);
  a.set_fun(0, {1}, 0);
  a.set_constant(0, 0);
  GeneralStructure b(v, 2);  // F fixes, c = 1
  b.set_pred(0, {0}, Value::of(1, 4));
  b.set_pred(0, {1}, Value::of(3, 4));
  b.set_fun(0, {0}, 0);
  b.set_fun(0, {1}, 1);
  b.set_constant(0, 1);

  IndexedFamily fam({a, b});
  GeneralStructure p = pre_reduced_product(fam, Filter::full(2));
  REQUIRE(p.universe() == 4);

  size_t e10 = fam.element({1, 0});
  CHECK(p.fun(0, {(int)e10}) == (int)fam.element({0, 0}));
  CHECK(p.constant(0) == (int)fam.element({0, 1}));
  CHECK(fam.coords(e10) == std::vector<int>{1, 0});

  // row values are kernel maxima of the coordinate values
  CHECK(p.pred(0, {(int)e10}) == Value::one());                    // max(1, 1/4)
  CHECK(p.pred(0, {(int)fam.element({0, 1})}) == Value::of(3, 4));  // max(0, 3/4)
  CHECK(p.pred(0, {(int)fam.element({1, 1})}) == Value::one());
  CHECK(p.pred(0, {(int)fam.element({0, 0})}) == Value::of(1, 4));
}

TEST_CASE("principal filters project onto one factor, formulas included") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_function("F", 1);
  GeneralStructure a(v, 2);
  a.set_pred(0, {0}, Value::of(1, 8));
  a.set_pred(0, {1}, Value::of(5, 8));
  a.set_fun(0, {0}, 1);
  a.set_fun(0, {1}, 1);
  GeneralStructure b(v, 3);
  b.set_pred(0, {0}, Value::of(1, 2));
  b.set_pred(0, {1}, Value::zero());
  b.set_pred(0, {2}, Value::one());
  b.set_fun(0, {0}, 2);
  b.set_fun(0, {1}, 0);
  b.set_fun(0, {2}, 1);

  IndexedFamily fam({a, b});
  for (int i = 0; i < 2; ++i) {
    GeneralStructure p = pre_reduced_product(fam, Filter::principal(2, i));
    for (const char* text : {"sup x . U(x)", "inf x . (1 -. U(F(x)))", "sup x . (U(x) -. U(F(x)))"}) {
      ContFormula phi = parse_cont_formula(text, *v);
      CHECK(eval_formula(p, phi) == eval_formula(fam.factor(i), phi));
    }
  }
}

TEST_CASE("the universe cap cuts off oversized products") {
  auto v = pq();
  GeneralStructure m(v, 1);
  std::vector<GeneralStructure> big(3, m);
  IndexedFamily fam(big);
  ProductOptions opts;
  opts.max_universe = 0;
  CHECK_THROWS_AS(pre_reduced_product(fam, Filter::full(3), opts), size_error);
}

TEST_CASE("parallel and serial fills produce identical tables") {
  Rng rng(7);
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_predicate("E", 2);
  v->add_function("F", 1);
  v->add_constant("c");
  std::vector<GeneralStructure> factors;
  for (int i = 0; i < 3; ++i) factors.push_back(gen_structure(rng, v, 3, Grid(3)));
  IndexedFamily fam(std::move(factors));
  Filter f(3, {0, 2});

  ProductOptions serial, parallel;
  serial.parallel = false;
  parallel.parallel = true;
  GeneralStructure ps = pre_reduced_product(fam, f, serial);
  GeneralStructure pp = pre_reduced_product(fam, f, parallel);
  for (int p = 0; p < 2; ++p) CHECK(ps.pred_table(p) == pp.pred_table(p));
  CHECK(ps.fun_table(0) == pp.fun_table(0));
  CHECK(ps.constant(0) == pp.constant(0));
}

TEST_CASE("the reduced product is the quotiented direct product") {
  auto v = pq();
  IndexedFamily fam({point(v, Value::of(1, 2), Value::zero()), point(v, Value::zero(), Value::of(1, 2))});
  auto [red, q] = reduced_product(fam, Filter::full(2));
  CHECK(red.universe() == 1);
  CHECK(red.pred(0, {}) == Value::of(1, 2));

  // two elements whose coordinates nothing distinguishes collapse
  auto u = std::make_shared<Vocabulary>();
  u->add_predicate("U", 1);
  GeneralStructure a(u, 2);
  a.set_pred(0, {0}, Value::of(1, 4));
  a.set_pred(0, {1}, Value::of(1, 4));
  GeneralStructure b(u, 1);
  b.set_pred(0, {0}, Value::of(3, 4));
  auto [red2, q2] = reduced_product(IndexedFamily({a, b}), Filter::full(2));
  CHECK(red2.universe() == 1);
  CHECK(q2.blocks.size() == 1);
  CHECK(red2.pred(0, {0}) == Value::of(3, 4));
}

TEST_CASE("two-valued reduced products can lose disjunctions") {
  auto v = pq();
  FOStructure k1(v, 1), k2(v, 1);
  k1.set_pred(0, {}, true);   // P holds in k1
  k2.set_pred(1, {}, true);   // Q holds in k2
  FOFormula por_q = parse_fo_formula("P | Q", *v);
  CHECK(eval_formula(k1, por_q));
  CHECK(eval_formula(k2, por_q));

  FOStructure prod = fo_reduced_product({k1, k2}, Filter::full(2));
  CHECK(prod.universe() == 1);
  CHECK_FALSE(prod.pred(0, {}));
  CHECK_FALSE(prod.pred(1, {}));
  CHECK_FALSE(eval_formula(prod, por_q));

  // at an ultrafilter the product is the chosen factor
  FOStructure at1 = fo_reduced_product({k1, k2}, Filter::principal(2, 1));
  CHECK_FALSE(at1.pred(0, {}));
  CHECK(at1.pred(1, {}));
}

TEST_CASE("classical product elements are kernel coordinate tuples") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_function("F", 1);
  FOStructure k1(v, 2), k2(v, 2), k3(v, 2);
  for (FOStructure* k : {&k1, &k2, &k3}) {
    k->set_pred(0, {1}, true);
    k->set_fun(0, {0}, 1);
    k->set_fun(0, {1}, 1);
  }
  Filter f(3, {1});
  FOStructure prod = fo_reduced_product({k1, k2, k3}, f);
  CHECK(prod.universe() == 2);  // only the kernel coordinate matters
  CHECK(fo_class_index({k1, k2, k3}, f, {0, 1, 0}) == fo_class_index({k1, k2, k3}, f, {1, 1, 1}));
  CHECK(fo_class_index({k1, k2, k3}, f, {0, 0, 0}) != fo_class_index({k1, k2, k3}, f, {0, 1, 0}));
  // the function still acts coordinatewise on the quotient
  CHECK(prod.fun(0, {0}) == 1);
  CHECK(prod.fun(0, {1}) == 1);
}

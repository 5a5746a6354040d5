#include <doctest.h>

#include "cmt/classify.hpp"
#include "cmt/errors.hpp"
#include "cmt/eval.hpp"
#include "cmt/parser.hpp"
#include "cmt/printer.hpp"
#include "cmt/translate.hpp"

using namespace cmt;

namespace {

VocabPtr vocab() {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P", 0);
  v->add_predicate("Q", 0);
  v->add_predicate("U", 1);
  v->add_predicate("E", 2);
  v->add_constant("c");
  return v;
}

}  // namespace

TEST_CASE("classical connectives map to their continuous counterparts") {
  auto v = vocab();
  auto tr = [&](const char* text) { return render_formula(fo_to_cont(parse_fo_formula(text, *v))); };
  CHECK(tr("P | Q") == "min(P, Q)");
  CHECK(tr("P & Q") == "max(P, Q)");
  CHECK(tr("~P") == "1 -. P");
  CHECK(tr("forall x . E(x, x)") == "sup x . E(x, x)");
  CHECK(tr("exists x . U(x)") == "inf x . U(x)");
  CHECK(tr("forall x . (~U(x) | E(x, c))") == "sup x . min(E(x, c), 1 -. U(x))");
  CHECK_THROWS_AS(fo_to_cont(parse_fo_formula("exists x . (x = c)", *v)), vocab_error);
}

TEST_CASE("translation preserves truth over two-valued structures") {
  auto v = vocab();
  FOStructure k(v, 2);
  k.set_pred(0, {}, true);            // P
  k.set_pred(2, {0}, true);           // U(0)
  k.set_pred(3, {0, 1}, true);        // E(0,1)
  k.set_constant(0, 1);
  GeneralStructure g = fo_to_general(k);
  for (const char* text : {
           "P | Q",
           "P & Q",
           "~Q",
           "forall x . U(x)",
           "exists x . U(x)",
           "forall x . exists y . E(x, y)",
           "exists x . (U(x) & ~U(c))",
           "forall x . forall y . (~E(x, y) | U(x))",
       }) {
    FOFormula f = parse_fo_formula(text, *v);
    bool holds = eval_formula(k, f);
    Value val = eval_formula(g, fo_to_cont(f));
    CHECK(holds == val.is_zero());
    CHECK((val.is_zero() || val.is_one()));
  }
}

TEST_CASE("pushing a unary map through a conditional keeps its value") {
  auto v = vocab();
  MonotoneConnective b = MonotoneConnective::sub_const(Value::of(1, 4));
  for (const char* text : {
           "max(P -. 1/2, Q)",
           "min(P, 1 -. Q)",
           "sup x . (U(x) -. 1/2)",
           "inf x . max(U(x), 1 -. U(x))",
           "max(1/4, half(P))",
       }) {
    ContFormula f = parse_cont_formula(text, *v);
    ContFormula pushed = push_unary(b, f);
    CHECK(classify_cont(pushed).conditional);
    for (long long pj = 0; pj <= 4; ++pj) {
      for (long long qj = 0; qj <= 4; ++qj) {
        GeneralStructure m(v, 2);
        m.set_pred(0, {}, Value::of(pj, 4));
        m.set_pred(1, {}, Value::of(qj, 4));
        m.set_pred(2, {0}, Value::of(pj, 4));
        m.set_pred(2, {1}, Value::of(qj, 4));
        m.set_constant(0, 0);
        CHECK(eval_formula(m, pushed) == b.eval(eval_formula(m, f)));
      }
    }
  }
  CHECK_THROWS_AS(push_unary(b, parse_cont_formula("min(P, Q)", *v)), vocab_error);
}

TEST_CASE("exactly representable maps come back exact") {
  std::vector<MonotoneConnective> exact{
      MonotoneConnective::identity(),
      MonotoneConnective::sub_const(Value::of(1, 4)),
      MonotoneConnective::add_const(Value::of(3, 8)),
      MonotoneConnective::half_map(),
      MonotoneConnective::constant(Value::of(1, 2)),
  };
  for (const auto& c : exact) {
    ContFormula tmpl = approx_restricted(c, Value::of(1, 2));
    for (long long j = 0; j <= 64; ++j) {
      Value x = Value::of(j, 64);
      CHECK(eval_unary_template(tmpl, "u", x) == c.eval(x));
    }
  }
  CHECK(render_formula(approx_restricted(MonotoneConnective::identity(), Value::of(1, 8))) == "u");
}

TEST_CASE("steep maps are approximated from below within the tolerance") {
  MonotoneConnective steep({{Value::zero(), Value::zero()},
                            {Value::of(1, 8), Value::one()},
                            {Value::one(), Value::one()}});
  Value eps = Value::of(1, 8);
  ContFormula tmpl = approx_restricted(steep, eps);
  CHECK(classify_cont(tmpl).restricted);
  for (long long j = 0; j <= 1024; ++j) {
    Value x = Value::of(j, 1024);
    Value a = eval_unary_template(tmpl, "u", x);
    Value target = steep.eval(x);
    CHECK(a <= target);
    CHECK(trunc_sub(target, a) <= eps);
  }
}

TEST_CASE("non-dyadic breakpoints approximate as well") {
  MonotoneConnective c({{Value::zero(), Value::zero()},
                        {Value::of(1, 3), Value::of(2, 3)},
                        {Value::one(), Value::one()}});
  Value eps = Value::of(1, 8);
  ContFormula tmpl = approx_restricted(c, eps);
  CHECK(classify_cont(tmpl).restricted);
  // check on a grid refining both the dyadic breakpoints and 1/3
  for (long long j = 0; j <= 768; ++j) {
    Value x = Value::of(j, 768);
    Value a = eval_unary_template(tmpl, "u", x);
    CHECK(a <= c.eval(x));
    CHECK(trunc_sub(c.eval(x), a) <= eps);
  }
}

TEST_CASE("instantiation replaces the hole everywhere") {
  Vocabulary hv;
  hv.add_predicate("u", 0);
  ContFormula tmpl = parse_cont_formula("min(u +. 1/4, 1 -. u)", hv);
  auto v = vocab();
  ContFormula arg = parse_cont_formula("P -. 1/8", *v);
  ContFormula inst = instantiate(tmpl, "u", arg);
  for (long long pj = 0; pj <= 8; ++pj) {
    GeneralStructure m(v, 1);
    m.set_pred(0, {}, Value::of(pj, 8));
    m.set_pred(2, {0}, Value::zero());
    m.set_constant(0, 0);
    CHECK(eval_formula(m, inst) == eval_unary_template(tmpl, "u", eval_formula(m, arg)));
  }
}

TEST_CASE("template evaluation rejects foreign symbols") {
  Vocabulary hv;
  hv.add_predicate("u", 0);
  hv.add_predicate("P", 0);
  ContFormula bad = parse_cont_formula("min(u, P)", hv);
  CHECK_THROWS_AS(eval_unary_template(bad, "u", Value::zero()), eval_error);
}

#include <doctest.h>

#include "cmt/downup.hpp"
#include "cmt/errors.hpp"
#include "cmt/leibniz.hpp"
#include "cmt/morphism.hpp"

using namespace cmt;

namespace {

VocabPtr sig() {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P", 1);
  v->add_function("F", 1);
  v->add_constant("c");
  return v;
}

// P = (3/8, 1), F swaps, c = 0; reduced and grid-valued for k = 3
GeneralStructure sample() {
  GeneralStructure m(sig(), 2);
  m.set_pred(0, {0}, Value::of(3, 8));
  m.set_pred(0, {1}, Value::one());
  m.set_fun(0, {0}, 1);
  m.set_fun(0, {1}, 0);
  m.set_constant(0, 0);
  return m;
}

}  // namespace

TEST_CASE("grid points and admission") {
  Grid g(3);
  CHECK(g.den() == 8);
  CHECK(g.point(0) == Value::zero());
  CHECK(g.point(7) == Value::of(7, 8));
  CHECK(g.admits(Value::of(3, 8)));
  CHECK(g.admits(Value::zero()));
  CHECK(g.admits(Value::one()));
  CHECK(g.admits(Value::of(1, 2)));
  CHECK_FALSE(g.admits(Value::of(1, 3)));
  CHECK_FALSE(g.admits(Value::of(5, 16)));
  CHECK_THROWS_AS(Grid(0), structure_error);
  CHECK_THROWS_AS(Grid(21), structure_error);
}

TEST_CASE("threshold names parse back, even with tricky bases") {
  CHECK(threshold_name("P", 3, 8) == "P_le_3_8");
  auto t = parse_threshold_name("P_le_3_8");
  REQUIRE(t.has_value());
  CHECK(t->base == "P");
  CHECK(t->j == 3);
  CHECK(t->den == 8);

  auto tricky = parse_threshold_name("P_le_1_le_3_8");
  REQUIRE(tricky.has_value());
  CHECK(tricky->base == "P_le_1");
  CHECK(tricky->j == 3);
  CHECK(tricky->den == 8);

  CHECK_FALSE(parse_threshold_name("P").has_value());
  CHECK_FALSE(parse_threshold_name("P_le_8").has_value());
  CHECK_FALSE(parse_threshold_name("P_le_x_8").has_value());
}

TEST_CASE("the threshold vocabulary lists each level in order") {
  auto v = sig();
  VocabPtr down = vocab_down(*v, Grid(2));
  REQUIRE(down->predicates().size() == 4);
  CHECK(down->predicates()[0].name == "P_le_0_4");
  CHECK(down->predicates()[3].name == "P_le_3_4");
  CHECK(down->predicates()[1].arity == 1);
  CHECK(down->functions().size() == 1);
  CHECK(down->constants().size() == 1);

  ThresholdInfo info = threshold_info(*down);
  CHECK(info.k == 2);
  CHECK(info.original->predicates().size() == 1);
  CHECK(info.original->predicates()[0].name == "P");
}

TEST_CASE("incomplete or inconsistent threshold families are rejected") {
  auto incomplete = std::make_shared<Vocabulary>();
  incomplete->add_predicate("P_le_0_4", 1);
  incomplete->add_predicate("P_le_1_4", 1);
  incomplete->add_predicate("P_le_3_4", 1);  // missing level 2
  CHECK_THROWS_AS(threshold_info(*incomplete), vocab_error);

  auto mixed = std::make_shared<Vocabulary>();
  mixed->add_predicate("P_le_0_2", 1);
  mixed->add_predicate("P_le_1_2", 2);
  CHECK_THROWS_AS(threshold_info(*mixed), vocab_error);

  auto plain = std::make_shared<Vocabulary>();
  plain->add_predicate("P", 1);
  CHECK_THROWS_AS(threshold_info(*plain), vocab_error);

  auto mixed_den = std::make_shared<Vocabulary>();
  mixed_den->add_predicate("P_le_0_2", 1);
  mixed_den->add_predicate("P_le_1_2", 1);
  mixed_den->add_predicate("Q_le_0_4", 1);
  for (int j = 1; j < 4; ++j) mixed_den->add_predicate(threshold_name("Q", j, 4), 1);
  CHECK_THROWS_AS(threshold_info(*mixed_den), vocab_error);
}

TEST_CASE("thresholds record which grid levels bound each value") {
  FOStructure k = structure_down(sample(), Grid(3));
  // P(0) = 3/8: true from level 3 up
  for (int j = 0; j < 8; ++j) CHECK(k.pred(j, {0}) == (j >= 3));
  // P(1) = 1 exceeds every level
  for (int j = 0; j < 8; ++j) CHECK_FALSE(k.pred(j, {1}));
  CHECK(k.fun(0, {0}) == 1);
  CHECK(k.constant(0) == 0);
  CHECK(is_increasing(k));
}

TEST_CASE("off-grid values round up to the next level and warn") {
  GeneralStructure m = sample();
  m.set_pred(0, {0}, Value::of(1, 3));
  std::vector<std::string> warnings;
  FOStructure k = structure_down(m, Grid(3), &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("P") != std::string::npos);
  // 1/3 is not a grid point; the tightest upper threshold is 3/8
  CHECK_FALSE(k.pred(2, {0}));
  CHECK(k.pred(3, {0}));
  GeneralStructure back = structure_up(k, Grid(3));
  CHECK(back.pred(0, {0}) == Value::of(3, 8));
}

TEST_CASE("collapsible universes are rejected rather than silently reduced") {
  auto v = sig();
  GeneralStructure m(v, 2);
  m.set_pred(0, {0}, Value::of(1, 2));
  m.set_pred(0, {1}, Value::of(1, 2));
  m.set_fun(0, {0}, 0);
  m.set_fun(0, {1}, 1);
  m.set_constant(0, 0);
  CHECK_FALSE(is_reduced(m));
  CHECK_THROWS_AS(structure_down(m, Grid(3)), structure_error);
}

TEST_CASE("monotonicity violations name the offending pair") {
  FOStructure k = structure_down(sample(), Grid(3));
  k.set_pred(4, {0}, false);  // level 3 holds, level 4 does not
  std::string why;
  CHECK_FALSE(is_increasing(k, &why));
  CHECK(why.find("P_le_3_8(0)") != std::string::npos);
  CHECK(why.find("P_le_4_8") != std::string::npos);
  CHECK_THROWS_AS(structure_up_raw(k, Grid(3)), structure_error);
}

TEST_CASE("rebuilding picks the least satisfied level") {
  FOStructure k = structure_down(sample(), Grid(3));
  GeneralStructure up = structure_up_raw(k, Grid(3));
  CHECK(up.pred(0, {0}) == Value::of(3, 8));
  CHECK(up.pred(0, {1}) == Value::one());
  CHECK(up.fun(0, {0}) == 1);
  CHECK(up.constant(0) == 0);
}

TEST_CASE("round trips are exact in both directions") {
  GeneralStructure m = sample();
  GeneralStructure back = structure_up(structure_down(m, Grid(3)), Grid(3));
  REQUIRE(back.universe() == m.universe());
  auto h = find_isomorphism(m, back);
  REQUIRE(h.has_value());

  FOStructure k = structure_down(m, Grid(3));
  FOStructure again = structure_down(structure_up(k, Grid(3)), Grid(3));
  REQUIRE(again.universe() == k.universe());
  for (int p = 0; p < (int)k.vocab().predicates().size(); ++p) CHECK(k.pred_table(p) == again.pred_table(p));
}

TEST_CASE("rebuilding collapses indiscernible threshold patterns") {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P_le_0_2", 1);
  v->add_predicate("P_le_1_2", 1);
  FOStructure k(v, 2);
  for (int j = 0; j < 2; ++j)
    for (int e = 0; e < 2; ++e) k.set_pred(j, {e}, j == 1);
  GeneralStructure up = structure_up(k, Grid(1));
  CHECK(up.universe() == 1);
  CHECK(up.pred(0, {0}) == Value::of(1, 2));
  CHECK(structure_up_raw(k, Grid(1)).universe() == 2);
}

TEST_CASE("the grid argument must match the file's own denominators") {
  FOStructure k = structure_down(sample(), Grid(3));
  CHECK_THROWS_AS(structure_up(k, Grid(2)), vocab_error);
}

#include <doctest.h>

#include "cmt/errors.hpp"
#include "cmt/filter.hpp"

using namespace cmt;

TEST_CASE("membership is containment of the kernel") {
  Filter f(3, {0, 2});
  CHECK(f.contains({0, 1, 2}));
  CHECK(f.contains({0, 2}));
  CHECK(f.contains({2, 0}));  // order does not matter
  CHECK_FALSE(f.contains({0, 1}));
  CHECK_FALSE(f.contains({2}));
  CHECK_FALSE(f.contains({}));
}

TEST_CASE("named constructions") {
  CHECK(Filter::full(3).kernel() == std::vector<int>{0, 1, 2});
  CHECK(Filter::principal(3, 1).kernel() == std::vector<int>{1});
  CHECK(Filter::principal(3, 1).ultra());
  CHECK_FALSE(Filter::full(3).ultra());
  CHECK(Filter(3, {2, 0}).kernel() == std::vector<int>{0, 2});  // stored sorted
}

TEST_CASE("improper or malformed filters are rejected") {
  CHECK_THROWS_AS(Filter(3, {}), filter_error);
  CHECK_THROWS_AS(Filter(3, {3}), filter_error);
  CHECK_THROWS_AS(Filter(3, {-1}), filter_error);
  CHECK_THROWS_AS(Filter(0, {0}), filter_error);
}

TEST_CASE("the filter generated by a subbasis has the intersection as kernel") {
  CHECK(filter_from_subbasis(3, {{0, 1}, {1, 2}}).kernel() == std::vector<int>{1});
  CHECK(filter_from_subbasis(3, {}).kernel() == std::vector<int>{0, 1, 2});
  CHECK(filter_from_subbasis(4, {{0, 1, 2}, {1, 2, 3}, {1, 2}}).kernel() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(filter_from_subbasis(3, {{0}, {1}}), filter_error);
}

TEST_CASE("every ultrafilter extending f is principal at a kernel point") {
  auto ultras = ultrafilters_extending(Filter(3, {0, 2}));
  REQUIRE(ultras.size() == 2);
  CHECK(ultras[0] == Filter::principal(3, 0));
  CHECK(ultras[1] == Filter::principal(3, 2));
  CHECK(ultrafilters_extending(Filter::principal(4, 3)) == std::vector<Filter>{Filter::principal(4, 3)});
}

TEST_CASE("limit superior is the maximum over the kernel") {
  std::vector<Value> x{Value::of(1, 4), Value::one(), Value::zero()};
  CHECK(limsup(Filter::full(3), x) == Value::one());
  CHECK(limsup(Filter::principal(3, 2), x) == Value::zero());
  CHECK(limsup(Filter(3, {0, 2}), x) == Value::of(1, 4));
}

TEST_CASE("the kernel maximum matches the definitional inf of sups") {
  std::vector<std::vector<Value>> sequences{
      {Value::of(1, 4), Value::one(), Value::zero()},
      {Value::zero(), Value::zero(), Value::zero()},
      {Value::of(1, 2), Value::of(1, 2), Value::of(7, 8)},
      {Value::one(), Value::of(1, 8), Value::of(3, 8)},
  };
  // every proper filter on three indices
  std::vector<std::vector<int>> kernels{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  for (const auto& k : kernels) {
    Filter f(3, k);
    for (const auto& x : sequences) {
      CHECK(limsup(f, x) == limsup_by_definition(f, x));
      // and it is the largest value any extending ultrafilter reaches
      Value best = Value::zero();
      for (const Filter& u : ultrafilters_extending(f)) best = vmax(best, limsup(u, x));
      CHECK(limsup(f, x) == best);
    }
  }
}

TEST_CASE("filter specs parse into kernels") {
  CHECK(parse_filter_spec("full", 3) == Filter::full(3));
  CHECK(parse_filter_spec("kernel=0,2", 3) == Filter(3, {0, 2}));
  CHECK(parse_filter_spec("kernel=1", 3) == Filter::principal(3, 1));
  CHECK(parse_filter_spec("subbasis={0,1};{1,2}", 3) == Filter::principal(3, 1));
  CHECK_THROWS_AS(parse_filter_spec("kernel=5", 3), filter_error);
  CHECK_THROWS_AS(parse_filter_spec("kernel=", 3), filter_error);
  CHECK_THROWS_AS(parse_filter_spec("nonsense", 3), filter_error);
  CHECK_THROWS_AS(parse_filter_spec("subbasis={0};{1}", 3), filter_error);
}

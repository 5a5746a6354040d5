#include <doctest.h>

#include "cmt/connective.hpp"
#include "cmt/errors.hpp"

using namespace cmt;

namespace {
Value v(long long n, long long d) { return Value::of(n, d); }
MonotoneConnective pl(std::vector<MonotoneConnective::Point> pts) { return MonotoneConnective(std::move(pts)); }
}  // namespace

TEST_CASE("interpolation between breakpoints is exact") {
  // rises with slope 2, then flat
  MonotoneConnective c = pl({{v(0, 1), v(0, 1)}, {v(1, 2), v(1, 1)}, {v(1, 1), v(1, 1)}});
  CHECK(c.eval(v(0, 1)) == v(0, 1));
  CHECK(c.eval(v(1, 3)) == v(2, 3));
  CHECK(c.eval(v(1, 2)) == v(1, 1));
  CHECK(c.eval(v(3, 4)) == v(1, 1));
  CHECK(c.max_slope().num == 2);
  CHECK(c.max_slope().den == 1);
}

TEST_CASE("named shapes evaluate to their defining formulas") {
  CHECK(MonotoneConnective::identity().eval(v(1, 3)) == v(1, 3));
  CHECK(MonotoneConnective::identity().is_identity());
  CHECK(MonotoneConnective::constant(v(1, 4)).eval(v(7, 8)) == v(1, 4));
  CHECK(MonotoneConnective::sub_const(v(1, 4)).eval(v(1, 8)) == v(0, 1));
  CHECK(MonotoneConnective::sub_const(v(1, 4)).eval(v(1, 2)) == v(1, 4));
  CHECK(MonotoneConnective::sub_const(v(1, 4)).eval(v(1, 1)) == v(3, 4));
  CHECK(MonotoneConnective::add_const(v(1, 4)).eval(v(1, 2)) == v(3, 4));
  CHECK(MonotoneConnective::add_const(v(1, 4)).eval(v(7, 8)) == v(1, 1));
  CHECK(MonotoneConnective::half_map().eval(v(1, 3)) == v(1, 6));
}

TEST_CASE("collinear interior points are dropped, so equal maps compare equal") {
  MonotoneConnective c = pl({{v(0, 1), v(0, 1)}, {v(1, 2), v(1, 2)}, {v(1, 1), v(1, 1)}});
  CHECK(c == MonotoneConnective::identity());
  CHECK(c.points().size() == 2);
  CHECK(compare(c, MonotoneConnective::identity()) == 0);
}

TEST_CASE("malformed breakpoint lists are rejected") {
  CHECK_THROWS_AS(pl({{v(0, 1), v(0, 1)}}), vocab_error);
  CHECK_THROWS_AS(pl({{v(1, 4), v(0, 1)}, {v(1, 1), v(1, 1)}}), vocab_error);       // starts late
  CHECK_THROWS_AS(pl({{v(0, 1), v(0, 1)}, {v(3, 4), v(1, 1)}}), vocab_error);       // ends early
  CHECK_THROWS_AS(pl({{v(0, 1), v(1, 1)}, {v(1, 1), v(0, 1)}}), vocab_error);       // decreasing
  CHECK_THROWS_AS(pl({{v(0, 1), v(0, 1)}, {v(0, 1), v(1, 2)}, {v(1, 1), v(1, 1)}}), vocab_error);  // repeated x
}

TEST_CASE("composition is exact and matches pointwise evaluation") {
  MonotoneConnective s = MonotoneConnective::sub_const(v(1, 4));
  MonotoneConnective ss = compose(s, s);
  CHECK(ss == MonotoneConnective::sub_const(v(1, 2)));
  CHECK(ss.eval(v(3, 4)) == v(1, 4));

  MonotoneConnective h_of_add = compose(MonotoneConnective::half_map(), MonotoneConnective::add_const(v(1, 2)));
  CHECK(h_of_add.eval(v(1, 2)) == v(1, 2));
  CHECK(h_of_add.eval(v(0, 1)) == v(1, 4));

  MonotoneConnective steep = pl({{v(0, 1), v(0, 1)}, {v(1, 2), v(1, 1)}, {v(1, 1), v(1, 1)}});
  MonotoneConnective both = compose(steep, MonotoneConnective::sub_const(v(1, 2)));
  for (long long j = 0; j <= 16; ++j) {
    Value x = Value::of(j, 16);
    CHECK(both.eval(x) == steep.eval(MonotoneConnective::sub_const(v(1, 2)).eval(x)));
  }
  CHECK(compose(MonotoneConnective::identity(), steep) == steep);
  CHECK(compose(steep, MonotoneConnective::identity()) == steep);
}

TEST_CASE("max_slope reports the steepest segment") {
  CHECK(MonotoneConnective::identity().max_slope().num == 1);
  CHECK(MonotoneConnective::constant(v(1, 2)).max_slope().num == 0);
  MonotoneConnective steep = pl({{v(0, 1), v(0, 1)}, {v(1, 8), v(1, 1)}, {v(1, 1), v(1, 1)}});
  CHECK(steep.max_slope().num == 8);
  CHECK(steep.max_slope().den == 1);
}

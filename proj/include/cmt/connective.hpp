#pragma once

#include <vector>

#include "cmt/value.hpp"

namespace cmt {

// A nondecreasing piecewise-linear map [0,1] -> [0,1] given by rational
// breakpoints.  The x coordinates are strictly increasing, starting at 0 and
// ending at 1; the y coordinates are nondecreasing.  Redundant (collinear)
// interior points are dropped on construction, so equal maps compare equal.
class MonotoneConnective {
 public:
  struct Point {
    Value x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  };

  explicit MonotoneConnective(std::vector<Point> points);

  static MonotoneConnective identity();
  static MonotoneConnective constant(Value c);
  static MonotoneConnective sub_const(Value t);  // u -. t
  static MonotoneConnective add_const(Value t);  // u +. t
  static MonotoneConnective half_map();          // half(u)

  Value eval(Value x) const;

  const std::vector<Point>& points() const { return points_; }
  bool is_identity() const;
  bool operator==(const MonotoneConnective& o) const { return points_ == o.points_; }

  // steepest segment slope, as an exact fraction
  detail::Frac max_slope() const;

 private:
  std::vector<Point> points_;
};

// outer(inner(x)), exact
MonotoneConnective compose(const MonotoneConnective& outer, const MonotoneConnective& inner);

int compare(const MonotoneConnective& a, const MonotoneConnective& b);

}  // namespace cmt

#include "cmt/connective.hpp"

#include <algorithm>

#include "cmt/errors.hpp"

namespace cmt {

using detail::Frac;
using detail::fadd;
using detail::fcmp;
using detail::fdiv;
using detail::fmul;
using detail::fsub;

MonotoneConnective::MonotoneConnective(std::vector<Point> points) {
  if (points.size() < 2) throw vocab_error("connective needs at least two breakpoints");
  if (!points.front().x.is_zero()) throw vocab_error("connective must start at x = 0");
  if (!points.back().x.is_one()) throw vocab_error("connective must end at x = 1");
  for (size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) throw vocab_error("connective x coordinates must be strictly increasing");
    if (points[i].y < points[i - 1].y) throw vocab_error("connective must be nondecreasing");
  }
  // drop interior points lying on the segment through their neighbours
  points_.push_back(points.front());
  for (size_t i = 1; i + 1 < points.size(); ++i) {
    const Point& a = points_.back();
    const Point& b = points[i];
    const Point& c = points[i + 1];
    Frac lhs = fmul(fsub(c.y.frac(), a.y.frac()), fsub(b.x.frac(), a.x.frac()));
    Frac rhs = fmul(fsub(b.y.frac(), a.y.frac()), fsub(c.x.frac(), a.x.frac()));
    if (fcmp(lhs, rhs) != 0) points_.push_back(b);
  }
  points_.push_back(points.back());
}

MonotoneConnective MonotoneConnective::identity() {
  return MonotoneConnective({{Value::zero(), Value::zero()}, {Value::one(), Value::one()}});
}

MonotoneConnective MonotoneConnective::constant(Value c) {
  return MonotoneConnective({{Value::zero(), c}, {Value::one(), c}});
}

MonotoneConnective MonotoneConnective::sub_const(Value t) {
  if (t.is_zero()) return identity();
  if (t.is_one()) return constant(Value::zero());
  return MonotoneConnective({{Value::zero(), Value::zero()}, {t, Value::zero()}, {Value::one(), one_minus(t)}});
}

MonotoneConnective MonotoneConnective::add_const(Value t) {
  if (t.is_zero()) return identity();
  if (t.is_one()) return constant(Value::one());
  return MonotoneConnective({{Value::zero(), t}, {one_minus(t), Value::one()}, {Value::one(), Value::one()}});
}

MonotoneConnective MonotoneConnective::half_map() {
  return MonotoneConnective({{Value::zero(), Value::zero()}, {Value::one(), Value::of(1, 2)}});
}

bool MonotoneConnective::is_identity() const {
  return points_.size() == 2 && points_[0].y.is_zero() && points_[1].y.is_one();
}

Value MonotoneConnective::eval(Value x) const {
  size_t lo = 0;
  for (size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].x <= x) lo = i;
  }
  if (points_[lo].x == x) return points_[lo].y;
  const Point& a = points_[lo];
  const Point& b = points_[lo + 1];
  Frac t = fdiv(fsub(x.frac(), a.x.frac()), fsub(b.x.frac(), a.x.frac()));
  return Value::of(fadd(a.y.frac(), fmul(t, fsub(b.y.frac(), a.y.frac()))));
}

Frac MonotoneConnective::max_slope() const {
  Frac best{0, 1};
  for (size_t i = 1; i < points_.size(); ++i) {
    Frac s = fdiv(fsub(points_[i].y.frac(), points_[i - 1].y.frac()),
                  fsub(points_[i].x.frac(), points_[i - 1].x.frac()));
    if (fcmp(s, best) > 0) best = s;
  }
  return best;
}

MonotoneConnective compose(const MonotoneConnective& outer, const MonotoneConnective& inner) {
  // x breakpoints of the composite: inner's own, plus preimages under inner of
  // outer's breakpoints.  Between consecutive ones both maps are linear.
  std::vector<Value> xs;
  for (const auto& p : inner.points()) xs.push_back(p.x);
  for (size_t i = 1; i < inner.points().size(); ++i) {
    const auto& a = inner.points()[i - 1];
    const auto& b = inner.points()[i];
    if (a.y == b.y) continue;
    for (const auto& q : outer.points()) {
      if (a.y < q.x && q.x < b.y) {
        Frac t = fdiv(fsub(q.x.frac(), a.y.frac()), fsub(b.y.frac(), a.y.frac()));
        xs.push_back(Value::of(fadd(a.x.frac(), fmul(t, fsub(b.x.frac(), a.x.frac())))));
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<MonotoneConnective::Point> pts;
  pts.reserve(xs.size());
  for (Value x : xs) pts.push_back({x, outer.eval(inner.eval(x))});
  return MonotoneConnective(std::move(pts));
}

int compare(const MonotoneConnective& a, const MonotoneConnective& b) {
  size_t n = std::min(a.points().size(), b.points().size());
  for (size_t i = 0; i < n; ++i) {
    int c = vcmp(a.points()[i].x, b.points()[i].x);
    if (c != 0) return c;
    c = vcmp(a.points()[i].y, b.points()[i].y);
    if (c != 0) return c;
  }
  return a.points().size() < b.points().size() ? -1 : a.points().size() > b.points().size() ? 1 : 0;
}

}  // namespace cmt

#include "cmt/value.hpp"

#include <charconv>
#include <stdexcept>

#include "cmt/errors.hpp"

namespace cmt {
namespace detail {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw internal_error("rational overflow");
  return static_cast<long long>(v);
}

Frac norm(i128 num, i128 den) {
  if (den == 0) throw internal_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g == 0) g = 1;
  return Frac{narrow(num / g), narrow(den / g)};
}

}  // namespace

Frac frac(long long num, long long den) { return norm(num, den); }

Frac fadd(Frac a, Frac b) {
  return norm(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}

Frac fsub(Frac a, Frac b) {
  return norm(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
}

Frac fmul(Frac a, Frac b) { return norm(i128(a.num) * b.num, i128(a.den) * b.den); }

Frac fdiv(Frac a, Frac b) {
  if (b.num == 0) throw internal_error("division by zero");
  return norm(i128(a.num) * b.den, i128(a.den) * b.num);
}

int fcmp(Frac a, Frac b) {
  i128 lhs = i128(a.num) * b.den;
  i128 rhs = i128(b.num) * a.den;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

}  // namespace detail

Value Value::of(detail::Frac f) {
  if (f.num < 0 || f.num > f.den) throw std::out_of_range("value outside [0,1]: " + std::to_string(f.num) + "/" + std::to_string(f.den));
  Value v;
  v.f_ = f;
  return v;
}

Value Value::of(long long num, long long den) { return of(detail::frac(num, den)); }

Value Value::dyadic(long long j, int k) {
  long long den = 1ll << k;
  return of(j, den);
}

std::optional<Value> Value::parse(std::string_view text) {
  auto read_ll = [](std::string_view s, long long& out) {
    auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
  };
  long long num = 0, den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!read_ll(text, num)) return std::nullopt;
  } else {
    if (!read_ll(text.substr(0, slash), num)) return std::nullopt;
    if (!read_ll(text.substr(slash + 1), den)) return std::nullopt;
    if (den <= 0) return std::nullopt;
  }
  if (num < 0 || num > den) return std::nullopt;
  return of(num, den);
}

std::string Value::str() const {
  if (f_.den == 1) return std::to_string(f_.num);
  return std::to_string(f_.num) + "/" + std::to_string(f_.den);
}

int vcmp(Value a, Value b) { return detail::fcmp(a.frac(), b.frac()); }

Value trunc_sub(Value a, Value b) {
  detail::Frac d = detail::fsub(a.frac(), b.frac());
  if (d.num <= 0) return Value::zero();
  return Value::of(d);
}

Value trunc_add(Value a, Value b) {
  detail::Frac s = detail::fadd(a.frac(), b.frac());
  if (detail::fcmp(s, detail::Frac{1, 1}) >= 0) return Value::one();
  return Value::of(s);
}

Value vmin(Value a, Value b) { return a <= b ? a : b; }
Value vmax(Value a, Value b) { return a <= b ? b : a; }

Value half(Value a) { return Value::of(detail::fmul(a.frac(), detail::Frac{1, 2})); }

Value one_minus(Value a) { return Value::of(detail::fsub(detail::Frac{1, 1}, a.frac())); }

Value vmul(Value a, Value b) { return Value::of(detail::fmul(a.frac(), b.frac())); }

}  // namespace cmt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cmt {

namespace detail {

// Signed exact fraction, always normalized (den > 0, gcd(|num|,den) = 1).
// Unrestricted range; used for slopes and interpolation intermediates.
struct Frac {
  long long num = 0;
  long long den = 1;
};

Frac frac(long long num, long long den);
Frac fadd(Frac a, Frac b);
Frac fsub(Frac a, Frac b);
Frac fmul(Frac a, Frac b);
Frac fdiv(Frac a, Frac b);
int fcmp(Frac a, Frac b);  // sign of a - b

}  // namespace detail

// A truth value: an exact rational in [0,1].  0 plays the role of "true",
// 1 of "false".  Construction outside the range throws std::out_of_range.
class Value {
 public:
  Value() = default;  // 0

  static Value of(long long num, long long den);
  static Value of(detail::Frac f);
  static Value zero() { return Value(); }
  static Value one() { return of(1, 1); }
  // j / 2^k
  static Value dyadic(long long j, int k);

  // Accepts "0", "1", "a/b"; rejects anything malformed or out of range.
  static std::optional<Value> parse(std::string_view text);

  long long num() const { return f_.num; }
  long long den() const { return f_.den; }
  detail::Frac frac() const { return f_; }

  bool is_zero() const { return f_.num == 0; }
  bool is_one() const { return f_.num == 1 && f_.den == 1; }
  bool is_dyadic() const { return (f_.den & (f_.den - 1)) == 0; }

  std::string str() const;

  bool operator==(const Value& o) const { return f_.num == o.f_.num && f_.den == o.f_.den; }
  bool operator<(const Value& o) const { return detail::fcmp(f_, o.f_) < 0; }
  bool operator<=(const Value& o) const { return detail::fcmp(f_, o.f_) <= 0; }
  bool operator>(const Value& o) const { return o < *this; }
  bool operator>=(const Value& o) const { return o <= *this; }

 private:
  detail::Frac f_;
};

int vcmp(Value a, Value b);  // sign of a - b
Value trunc_sub(Value a, Value b);  // max(a - b, 0)
Value trunc_add(Value a, Value b);  // min(a + b, 1)
Value vmin(Value a, Value b);
Value vmax(Value a, Value b);
Value half(Value a);
Value one_minus(Value a);
Value vmul(Value a, Value b);

}  // namespace cmt

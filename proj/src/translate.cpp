#include "cmt/translate.hpp"

#include "cmt/errors.hpp"

namespace cmt {

using detail::Frac;
using detail::fcmp;
using detail::fdiv;
using detail::fmul;

namespace {

ContFormula fo_to_cont_rec(const FOFormula& f) {
  using K = FOFormula::Kind;
  switch (f.kind) {
    case K::atomic:
      return cf::atomic(f.pred, f.args);
    case K::equal:
      throw vocab_error("equality has no continuous counterpart here; translate equality-free formulas");
    case K::lnot:
      return cf::negate(fo_to_cont_rec(f.children[0]));
    case K::lor: {
      std::vector<ContFormula> parts;
      parts.reserve(f.children.size());
      for (const FOFormula& c : f.children) parts.push_back(fo_to_cont_rec(c));
      return cf::min(std::move(parts));
    }
    case K::land: {
      std::vector<ContFormula> parts;
      parts.reserve(f.children.size());
      for (const FOFormula& c : f.children) parts.push_back(fo_to_cont_rec(c));
      return cf::max(std::move(parts));
    }
    case K::forall:
      return cf::sup(f.var, fo_to_cont_rec(f.children[0]));
    case K::exists:
      return cf::inf(f.var, fo_to_cont_rec(f.children[0]));
  }
  throw internal_error("unreachable formula kind");
}

}  // namespace

ContFormula fo_to_cont(const FOFormula& f) { return normalize(fo_to_cont_rec(f)); }

namespace {

ContFormula push_unary_rec(const MonotoneConnective& b, const ContFormula& f) {
  using K = ContFormula::Kind;
  if (f.kind == K::max || f.kind == K::sup || f.kind == K::inf) {
    ContFormula out = f;
    for (ContFormula& c : out.children) c = push_unary_rec(b, c);
    return out;
  }
  auto parts = match_primitive_conditional(f);
  if (!parts) throw internal_error("push_unary hit a non-primitive leaf");
  std::vector<ContFormula> conjuncts;
  conjuncts.reserve(parts->size());
  for (PrimitivePart& part : *parts) {
    MonotoneConnective outer = part.outer ? compose(b, *part.outer) : b;
    conjuncts.push_back(cf::apply(std::move(outer), std::move(part.leaf)));
  }
  return conjuncts.size() == 1 ? std::move(conjuncts[0]) : cf::min(std::move(conjuncts));
}

}  // namespace

ContFormula push_unary(const MonotoneConnective& b, const ContFormula& raw) {
  ContFormula f = normalize(raw);
  ContClassification cls = classify_cont(f);
  if (!cls.conditional)
    throw vocab_error("push_unary needs a conditional formula; first violation " + cls.witnesses.at("conditional"));
  return normalize(push_unary_rec(b, f));
}

namespace {

// largest dyadic j/2^m below-or-equal x
Value dyadic_floor(Value x, int m) {
  long long den = 1ll << m;
  long long j = (long long)(((__int128)x.num() * den) / x.den());
  return Value::of(j, den);
}

int pow2_at_least(Frac bound) {
  int m = 0;
  while (fcmp(Frac{1ll << m, 1}, bound) < 0) {
    if (++m > 24) throw size_error("approximation template would blow up; relax the tolerance");
  }
  return m;
}

}  // namespace

ContFormula approx_restricted(const MonotoneConnective& c, Value eps, const std::string& hole) {
  ContFormula u = cf::atomic(hole);

  // shapes the restricted set expresses exactly
  if (c.is_identity()) return u;
  if (c.points().size() == 2 && c.points()[0].y == c.points()[1].y) {
    Value v = c.points()[0].y;
    if (v.is_dyadic()) return cf::constant(v);
  }
  {
    Value t0 = c.points().front().y;  // add_const(t) starts at (0, t)
    if (!t0.is_zero() && t0.is_dyadic() && c == MonotoneConnective::add_const(t0))
      return normalize(cf::add(u, cf::constant(t0)));
    const auto& pts = c.points();
    if (pts.size() == 3 && pts[1].y.is_zero() && pts[1].x.is_dyadic() &&
        c == MonotoneConnective::sub_const(pts[1].x))
      return normalize(cf::sub(u, cf::constant(pts[1].x)));
    if (c == MonotoneConnective::half_map()) return cf::half(u);
  }

  if (eps.is_zero()) throw vocab_error("zero tolerance is only possible for exactly representable maps");

  Frac L = c.max_slope();
  if (L.num == 0) {
    // constant map with a non-dyadic value: nearest dyadic from below
    int mq = pow2_at_least(fdiv(Frac{1, 1}, eps.frac()));
    return cf::constant(dyadic_floor(c.eval(Value::zero()), mq));
  }

  // sample pitch h = 2^-m with 2Lh <= 3eps/4; value grid 2^-mq with
  // 2^-mq <= eps/4; ramps rise with slope 2^m so they saturate within one
  // pitch.  The result stays below c and within eps of it.
  int m = pow2_at_least(fdiv(fmul(Frac{8, 3}, L), eps.frac()));
  int mq = pow2_at_least(fdiv(Frac{4, 1}, eps.frac()));
  long long steps = 1ll << m;
  if (steps > (1ll << 12)) throw size_error("approximation template would blow up; relax the tolerance");

  std::vector<ContFormula> terms;
  terms.push_back(cf::constant(dyadic_floor(c.eval(Value::zero()), mq)));
  for (long long j = 1; j < steps; ++j) {
    Value t = Value::of(j, steps);
    Value q = dyadic_floor(c.eval(t), mq);
    if (q.is_zero()) continue;
    ContFormula ramp = cf::sub(u, cf::constant(t));
    for (int d = 0; d < m; ++d) ramp = cf::add(ramp, ramp);
    terms.push_back(cf::min({cf::constant(q), std::move(ramp)}));
  }
  return normalize(cf::max(std::move(terms)));
}

ContFormula instantiate(const ContFormula& tmpl, const std::string& hole, const ContFormula& arg) {
  using K = ContFormula::Kind;
  if (tmpl.kind == K::atomic && tmpl.pred == hole) {
    if (!tmpl.args.empty()) throw vocab_error("template hole must be 0-ary");
    return arg;
  }
  ContFormula out = tmpl;
  for (ContFormula& c : out.children) c = instantiate(c, hole, arg);
  return out;
}

Value eval_unary_template(const ContFormula& tmpl, const std::string& hole, Value x) {
  using K = ContFormula::Kind;
  switch (tmpl.kind) {
    case K::atomic:
      if (tmpl.pred == hole && tmpl.args.empty()) return x;
      throw eval_error("template mentions a predicate besides the hole: " + tmpl.pred);
    case K::constant:
      return tmpl.value;
    case K::min: {
      Value v = eval_unary_template(tmpl.children[0], hole, x);
      for (size_t i = 1; i < tmpl.children.size(); ++i) v = vmin(v, eval_unary_template(tmpl.children[i], hole, x));
      return v;
    }
    case K::max: {
      Value v = eval_unary_template(tmpl.children[0], hole, x);
      for (size_t i = 1; i < tmpl.children.size(); ++i) v = vmax(v, eval_unary_template(tmpl.children[i], hole, x));
      return v;
    }
    case K::trunc_sub:
      return trunc_sub(eval_unary_template(tmpl.children[0], hole, x), eval_unary_template(tmpl.children[1], hole, x));
    case K::trunc_add:
      return trunc_add(eval_unary_template(tmpl.children[0], hole, x), eval_unary_template(tmpl.children[1], hole, x));
    case K::half:
      return half(eval_unary_template(tmpl.children[0], hole, x));
    case K::apply:
      return tmpl.conn->eval(eval_unary_template(tmpl.children[0], hole, x));
    default:
      throw eval_error("template must be quantifier-free");
  }
}

}  // namespace cmt

#include "cmt/formula.hpp"

#include <algorithm>

#include "cmt/errors.hpp"

namespace cmt {

Term tvar(std::string name) {
  Term t;
  t.kind = Term::Kind::variable;
  t.name = std::move(name);
  return t;
}

Term tconst(std::string name) {
  Term t;
  t.kind = Term::Kind::constant;
  t.name = std::move(name);
  return t;
}

Term tapp(std::string fn, std::vector<Term> args) {
  Term t;
  t.kind = Term::Kind::apply;
  t.name = std::move(fn);
  t.args = std::move(args);
  return t;
}

int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
  size_t n = std::min(a.args.size(), b.args.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare(a.args[i], b.args[i])) return c;
  return a.args.size() < b.args.size() ? -1 : a.args.size() > b.args.size() ? 1 : 0;
}

bool Term::operator==(const Term& o) const { return compare(*this, o) == 0; }

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::variable) out.insert(t.name);
  for (const Term& a : t.args) collect_term_vars(a, out);
}

namespace cf {

ContFormula atomic(std::string pred, std::vector<Term> args) {
  ContFormula f;
  f.kind = ContFormula::Kind::atomic;
  f.pred = std::move(pred);
  f.args = std::move(args);
  return f;
}

ContFormula constant(Value v) {
  if (!v.is_dyadic()) throw vocab_error("constant formula must be dyadic: " + v.str());
  ContFormula f;
  f.kind = ContFormula::Kind::constant;
  f.value = v;
  return f;
}

static ContFormula nary(ContFormula::Kind k, std::vector<ContFormula> children) {
  if (children.empty()) throw vocab_error("min/max needs at least one argument");
  ContFormula f;
  f.kind = k;
  f.children = std::move(children);
  return f;
}

ContFormula min(std::vector<ContFormula> children) { return nary(ContFormula::Kind::min, std::move(children)); }
ContFormula max(std::vector<ContFormula> children) { return nary(ContFormula::Kind::max, std::move(children)); }

static ContFormula binary(ContFormula::Kind k, ContFormula l, ContFormula r) {
  ContFormula f;
  f.kind = k;
  f.children.push_back(std::move(l));
  f.children.push_back(std::move(r));
  return f;
}

ContFormula sub(ContFormula l, ContFormula r) { return binary(ContFormula::Kind::trunc_sub, std::move(l), std::move(r)); }
ContFormula add(ContFormula l, ContFormula r) { return binary(ContFormula::Kind::trunc_add, std::move(l), std::move(r)); }

ContFormula half(ContFormula child) {
  ContFormula f;
  f.kind = ContFormula::Kind::half;
  f.children.push_back(std::move(child));
  return f;
}

ContFormula apply(MonotoneConnective c, ContFormula child) {
  ContFormula f;
  f.kind = ContFormula::Kind::apply;
  f.conn = std::move(c);
  f.children.push_back(std::move(child));
  return f;
}

static ContFormula quant(ContFormula::Kind k, std::string var, ContFormula body) {
  ContFormula f;
  f.kind = k;
  f.var = std::move(var);
  f.children.push_back(std::move(body));
  return f;
}

ContFormula sup(std::string var, ContFormula body) { return quant(ContFormula::Kind::sup, std::move(var), std::move(body)); }
ContFormula inf(std::string var, ContFormula body) { return quant(ContFormula::Kind::inf, std::move(var), std::move(body)); }

ContFormula negate(ContFormula child) { return sub(constant(Value::one()), std::move(child)); }

}  // namespace cf

int compare(const ContFormula& a, const ContFormula& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case ContFormula::Kind::atomic: {
      if (int c = a.pred.compare(b.pred)) return c < 0 ? -1 : 1;
      size_t n = std::min(a.args.size(), b.args.size());
      for (size_t i = 0; i < n; ++i)
        if (int c = compare(a.args[i], b.args[i])) return c;
      if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
      return 0;
    }
    case ContFormula::Kind::constant:
      return vcmp(a.value, b.value);
    case ContFormula::Kind::apply:
      if (int c = compare(*a.conn, *b.conn)) return c;
      break;
    case ContFormula::Kind::sup:
    case ContFormula::Kind::inf:
      if (int c = a.var.compare(b.var)) return c < 0 ? -1 : 1;
      break;
    default:
      break;
  }
  size_t n = std::min(a.children.size(), b.children.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare(a.children[i], b.children[i])) return c;
  if (a.children.size() != b.children.size()) return a.children.size() < b.children.size() ? -1 : 1;
  return 0;
}

bool ContFormula::operator==(const ContFormula& o) const { return compare(*this, o) == 0; }

static void free_vars_rec(const ContFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case ContFormula::Kind::atomic: {
      std::set<std::string> vs;
      for (const Term& t : f.args) collect_term_vars(t, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case ContFormula::Kind::sup:
    case ContFormula::Kind::inf: {
      bool fresh = bound.insert(f.var).second;
      free_vars_rec(f.children[0], bound, out);
      if (fresh) bound.erase(f.var);
      break;
    }
    default:
      for (const ContFormula& c : f.children) free_vars_rec(c, bound, out);
  }
}

std::set<std::string> free_vars(const ContFormula& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

bool is_sentence(const ContFormula& f) { return free_vars(f).empty(); }

ContFormula normalize(const ContFormula& f) {
  using K = ContFormula::Kind;
  switch (f.kind) {
    case K::atomic:
    case K::constant:
      return f;
    case K::min:
    case K::max: {
      bool is_min = f.kind == K::min;
      std::vector<ContFormula> flat;
      std::optional<Value> acc;
      for (const ContFormula& c : f.children) {
        ContFormula n = normalize(c);
        if (n.kind == f.kind) {
          for (ContFormula& g : n.children) {
            if (g.kind == K::constant)
              acc = acc ? (is_min ? vmin(*acc, g.value) : vmax(*acc, g.value)) : g.value;
            else
              flat.push_back(std::move(g));
          }
        } else if (n.kind == K::constant) {
          acc = acc ? (is_min ? vmin(*acc, n.value) : vmax(*acc, n.value)) : n.value;
        } else {
          flat.push_back(std::move(n));
        }
      }
      if (acc) {
        // absorbing / neutral element
        if (is_min && acc->is_zero()) return cf::constant(Value::zero());
        if (!is_min && acc->is_one()) return cf::constant(Value::one());
        bool neutral = is_min ? acc->is_one() : acc->is_zero();
        if (!neutral || flat.empty()) flat.push_back(cf::constant(*acc));
      }
      std::sort(flat.begin(), flat.end(), [](const ContFormula& a, const ContFormula& b) { return compare(a, b) < 0; });
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      if (flat.size() == 1) return flat[0];
      ContFormula out;
      out.kind = f.kind;
      out.children = std::move(flat);
      return out;
    }
    case K::trunc_sub: {
      ContFormula l = normalize(f.children[0]);
      ContFormula r = normalize(f.children[1]);
      if (l.kind == K::constant && r.kind == K::constant) return cf::constant(trunc_sub(l.value, r.value));
      if (l.kind == K::constant && l.value.is_zero()) return cf::constant(Value::zero());
      if (r.kind == K::constant && r.value.is_zero()) return l;
      if (r.kind == K::constant && r.value.is_one()) return cf::constant(Value::zero());
      return cf::sub(std::move(l), std::move(r));
    }
    case K::trunc_add: {
      ContFormula l = normalize(f.children[0]);
      ContFormula r = normalize(f.children[1]);
      if (l.kind == K::constant && r.kind == K::constant) return cf::constant(trunc_add(l.value, r.value));
      if (l.kind == K::constant && l.value.is_zero()) return r;
      if (r.kind == K::constant && r.value.is_zero()) return l;
      if ((l.kind == K::constant && l.value.is_one()) || (r.kind == K::constant && r.value.is_one()))
        return cf::constant(Value::one());
      return cf::add(std::move(l), std::move(r));
    }
    case K::half: {
      ContFormula c = normalize(f.children[0]);
      if (c.kind == K::constant) return cf::constant(half(c.value));
      return cf::half(std::move(c));
    }
    case K::apply: {
      ContFormula c = normalize(f.children[0]);
      MonotoneConnective conn = *f.conn;
      if (conn.is_identity()) return c;
      if (c.kind == K::apply) {
        conn = compose(conn, *c.conn);
        if (conn.is_identity()) return c.children[0];
        c = c.children[0];
      }
      if (c.kind == K::constant) {
        Value v = conn.eval(c.value);
        if (v.is_dyadic()) return cf::constant(v);
      }
      return cf::apply(std::move(conn), std::move(c));
    }
    case K::sup:
    case K::inf: {
      ContFormula body = normalize(f.children[0]);
      if (body.kind == K::constant) return body;
      if (!free_vars(body).count(f.var)) return body;
      ContFormula out;
      out.kind = f.kind;
      out.var = f.var;
      out.children.push_back(std::move(body));
      return out;
    }
  }
  throw internal_error("unreachable formula kind");
}

namespace fo {

FOFormula atomic(std::string pred, std::vector<Term> args) {
  FOFormula f;
  f.kind = FOFormula::Kind::atomic;
  f.pred = std::move(pred);
  f.args = std::move(args);
  return f;
}

FOFormula equal(Term l, Term r) {
  FOFormula f;
  f.kind = FOFormula::Kind::equal;
  f.args.push_back(std::move(l));
  f.args.push_back(std::move(r));
  return f;
}

FOFormula lnot(FOFormula child) {
  FOFormula f;
  f.kind = FOFormula::Kind::lnot;
  f.children.push_back(std::move(child));
  return f;
}

static FOFormula junction(FOFormula::Kind k, std::vector<FOFormula> children) {
  if (children.empty()) throw vocab_error("conjunction/disjunction needs at least one argument");
  FOFormula f;
  f.kind = k;
  f.children = std::move(children);
  return f;
}

FOFormula land(std::vector<FOFormula> children) { return junction(FOFormula::Kind::land, std::move(children)); }
FOFormula lor(std::vector<FOFormula> children) { return junction(FOFormula::Kind::lor, std::move(children)); }

static FOFormula quant(FOFormula::Kind k, std::string var, FOFormula body) {
  FOFormula f;
  f.kind = k;
  f.var = std::move(var);
  f.children.push_back(std::move(body));
  return f;
}

FOFormula forall(std::string var, FOFormula body) { return quant(FOFormula::Kind::forall, std::move(var), std::move(body)); }
FOFormula exists(std::string var, FOFormula body) { return quant(FOFormula::Kind::exists, std::move(var), std::move(body)); }

}  // namespace fo

int compare(const FOFormula& a, const FOFormula& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind == FOFormula::Kind::atomic)
    if (int c = a.pred.compare(b.pred)) return c < 0 ? -1 : 1;
  if (a.kind == FOFormula::Kind::atomic || a.kind == FOFormula::Kind::equal) {
    size_t n = std::min(a.args.size(), b.args.size());
    for (size_t i = 0; i < n; ++i)
      if (int c = compare(a.args[i], b.args[i])) return c;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  }
  if (a.kind == FOFormula::Kind::forall || a.kind == FOFormula::Kind::exists)
    if (int c = a.var.compare(b.var)) return c < 0 ? -1 : 1;
  size_t n = std::min(a.children.size(), b.children.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare(a.children[i], b.children[i])) return c;
  if (a.children.size() != b.children.size()) return a.children.size() < b.children.size() ? -1 : 1;
  return 0;
}

bool FOFormula::operator==(const FOFormula& o) const { return compare(*this, o) == 0; }

static void fo_free_vars_rec(const FOFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case FOFormula::Kind::atomic:
    case FOFormula::Kind::equal: {
      std::set<std::string> vs;
      for (const Term& t : f.args) collect_term_vars(t, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case FOFormula::Kind::forall:
    case FOFormula::Kind::exists: {
      bool fresh = bound.insert(f.var).second;
      fo_free_vars_rec(f.children[0], bound, out);
      if (fresh) bound.erase(f.var);
      break;
    }
    default:
      for (const FOFormula& c : f.children) fo_free_vars_rec(c, bound, out);
  }
}

std::set<std::string> free_vars(const FOFormula& f) {
  std::set<std::string> bound, out;
  fo_free_vars_rec(f, bound, out);
  return out;
}

bool is_sentence(const FOFormula& f) { return free_vars(f).empty(); }

FOFormula normalize(const FOFormula& f) {
  using K = FOFormula::Kind;
  switch (f.kind) {
    case K::atomic:
      return f;
    case K::equal: {
      FOFormula out = f;
      if (compare(out.args[0], out.args[1]) > 0) std::swap(out.args[0], out.args[1]);
      return out;
    }
    case K::land:
    case K::lor: {
      std::vector<FOFormula> flat;
      for (const FOFormula& c : f.children) {
        FOFormula n = normalize(c);
        if (n.kind == f.kind)
          for (FOFormula& g : n.children) flat.push_back(std::move(g));
        else
          flat.push_back(std::move(n));
      }
      std::sort(flat.begin(), flat.end(), [](const FOFormula& a, const FOFormula& b) { return compare(a, b) < 0; });
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      if (flat.size() == 1) return flat[0];
      FOFormula out;
      out.kind = f.kind;
      out.children = std::move(flat);
      return out;
    }
    case K::lnot: {
      FOFormula out;
      out.kind = K::lnot;
      out.children.push_back(normalize(f.children[0]));
      return out;
    }
    case K::forall:
    case K::exists: {
      FOFormula out;
      out.kind = f.kind;
      out.var = f.var;
      out.children.push_back(normalize(f.children[0]));
      return out;
    }
  }
  throw internal_error("unreachable formula kind");
}

}  // namespace cmt

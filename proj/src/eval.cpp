#include "cmt/eval.hpp"

#include "cmt/errors.hpp"

namespace cmt {

namespace {

template <typename S>
int term_value(const S& m, const Term& t, const Assignment& a) {
  switch (t.kind) {
    case Term::Kind::variable: {
      auto it = a.find(t.name);
      if (it == a.end()) throw eval_error("unassigned variable: " + t.name);
      if (it->second < 0 || it->second >= m.universe())
        throw eval_error("assignment maps " + t.name + " outside the universe");
      return it->second;
    }
    case Term::Kind::constant: {
      int c = m.vocab().constant_index(t.name);
      if (c < 0) throw eval_error("unknown constant: " + t.name);
      return m.constant(c);
    }
    case Term::Kind::apply: {
      int f = m.vocab().function_index(t.name);
      if (f < 0) throw eval_error("unknown function: " + t.name);
      if ((int)t.args.size() != m.vocab().functions()[f].arity)
        throw eval_error("arity mismatch for function " + t.name);
      std::vector<int> args;
      args.reserve(t.args.size());
      for (const Term& s : t.args) args.push_back(term_value(m, s, a));
      return m.fun(f, args);
    }
  }
  throw internal_error("unreachable term kind");
}

template <typename S>
std::vector<int> atom_args(const S& m, const std::vector<Term>& ts, const Assignment& a) {
  std::vector<int> out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(term_value(m, t, a));
  return out;
}

Value eval_cont(const GeneralStructure& m, const ContFormula& f, Assignment& a) {
  using K = ContFormula::Kind;
  switch (f.kind) {
    case K::atomic: {
      int p = m.vocab().predicate_index(f.pred);
      if (p < 0) throw eval_error("unknown predicate: " + f.pred);
      if ((int)f.args.size() != m.vocab().predicates()[p].arity)
        throw eval_error("arity mismatch for predicate " + f.pred);
      return m.pred(p, atom_args(m, f.args, a));
    }
    case K::constant:
      return f.value;
    case K::min: {
      Value v = eval_cont(m, f.children[0], a);
      for (size_t i = 1; i < f.children.size(); ++i) v = vmin(v, eval_cont(m, f.children[i], a));
      return v;
    }
    case K::max: {
      Value v = eval_cont(m, f.children[0], a);
      for (size_t i = 1; i < f.children.size(); ++i) v = vmax(v, eval_cont(m, f.children[i], a));
      return v;
    }
    case K::trunc_sub:
      return trunc_sub(eval_cont(m, f.children[0], a), eval_cont(m, f.children[1], a));
    case K::trunc_add:
      return trunc_add(eval_cont(m, f.children[0], a), eval_cont(m, f.children[1], a));
    case K::half:
      return half(eval_cont(m, f.children[0], a));
    case K::apply:
      return f.conn->eval(eval_cont(m, f.children[0], a));
    case K::sup:
    case K::inf: {
      bool want_max = f.kind == K::sup;
      auto saved = a.find(f.var) != a.end() ? std::optional<int>(a[f.var]) : std::nullopt;
      Value best;
      for (int e = 0; e < m.universe(); ++e) {
        a[f.var] = e;
        Value v = eval_cont(m, f.children[0], a);
        if (e == 0)
          best = v;
        else
          best = want_max ? vmax(best, v) : vmin(best, v);
      }
      if (saved)
        a[f.var] = *saved;
      else
        a.erase(f.var);
      return best;
    }
  }
  throw internal_error("unreachable formula kind");
}

bool eval_fo(const FOStructure& k, const FOFormula& f, Assignment& a) {
  using K = FOFormula::Kind;
  switch (f.kind) {
    case K::atomic: {
      int p = k.vocab().predicate_index(f.pred);
      if (p < 0) throw eval_error("unknown predicate: " + f.pred);
      if ((int)f.args.size() != k.vocab().predicates()[p].arity)
        throw eval_error("arity mismatch for predicate " + f.pred);
      return k.pred(p, atom_args(k, f.args, a));
    }
    case K::equal:
      return term_value(k, f.args[0], a) == term_value(k, f.args[1], a);
    case K::lnot:
      return !eval_fo(k, f.children[0], a);
    case K::land:
      for (const FOFormula& c : f.children)
        if (!eval_fo(k, c, a)) return false;
      return true;
    case K::lor:
      for (const FOFormula& c : f.children)
        if (eval_fo(k, c, a)) return true;
      return false;
    case K::forall:
    case K::exists: {
      bool want_all = f.kind == K::forall;
      auto saved = a.find(f.var) != a.end() ? std::optional<int>(a[f.var]) : std::nullopt;
      bool result = want_all;
      for (int e = 0; e < k.universe(); ++e) {
        a[f.var] = e;
        bool v = eval_fo(k, f.children[0], a);
        if (want_all && !v) {
          result = false;
          break;
        }
        if (!want_all && v) {
          result = true;
          break;
        }
      }
      if (saved)
        a[f.var] = *saved;
      else
        a.erase(f.var);
      return result;
    }
  }
  throw internal_error("unreachable formula kind");
}

}  // namespace

Value eval_formula(const GeneralStructure& m, const ContFormula& f, const Assignment& a) {
  Assignment scratch = a;
  return eval_cont(m, f, scratch);
}

bool eval_formula(const FOStructure& k, const FOFormula& f, const Assignment& a) {
  Assignment scratch = a;
  return eval_fo(k, f, scratch);
}

int eval_term(const GeneralStructure& m, const Term& t, const Assignment& a) { return term_value(m, t, a); }

int eval_term(const FOStructure& k, const Term& t, const Assignment& a) { return term_value(k, t, a); }

}  // namespace cmt

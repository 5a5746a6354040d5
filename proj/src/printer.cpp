#include "cmt/printer.hpp"

#include "cmt/errors.hpp"

namespace cmt {

std::string render_term(const Term& t) {
  if (t.kind != Term::Kind::apply) return t.name;
  std::string out = t.name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    out += render_term(t.args[i]);
  }
  return out + ")";
}

std::string render_connective(const MonotoneConnective& c) {
  std::string out = "C[";
  for (size_t i = 0; i < c.points().size(); ++i) {
    if (i) out += ",";
    out += "(" + c.points()[i].x.str() + "," + c.points()[i].y.str() + ")";
  }
  return out + "]";
}

namespace {

// precedence levels: 0 quantifier body, 1 -./+. chain, 2 primary
void render_cont(const ContFormula& f, int level, std::string& out) {
  using K = ContFormula::Kind;
  switch (f.kind) {
    case K::sup:
    case K::inf: {
      bool parens = level > 0;
      if (parens) out += "(";
      out += f.kind == K::sup ? "sup " : "inf ";
      out += f.var + " . ";
      render_cont(f.children[0], 0, out);
      if (parens) out += ")";
      return;
    }
    case K::trunc_sub:
    case K::trunc_add: {
      bool parens = level > 1;
      if (parens) out += "(";
      render_cont(f.children[0], 1, out);
      out += f.kind == K::trunc_sub ? " -. " : " +. ";
      render_cont(f.children[1], 2, out);
      if (parens) out += ")";
      return;
    }
    case K::min:
    case K::max: {
      out += f.kind == K::min ? "min(" : "max(";
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += ", ";
        render_cont(f.children[i], 0, out);
      }
      out += ")";
      return;
    }
    case K::half:
      out += "half(";
      render_cont(f.children[0], 0, out);
      out += ")";
      return;
    case K::apply:
      out += render_connective(*f.conn);
      out += "(";
      render_cont(f.children[0], 0, out);
      out += ")";
      return;
    case K::constant:
      out += f.value.str();
      return;
    case K::atomic: {
      out += f.pred;
      if (!f.args.empty()) {
        out += "(";
        for (size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ", ";
          out += render_term(f.args[i]);
        }
        out += ")";
      }
      return;
    }
  }
  throw internal_error("unreachable formula kind");
}

// levels: 0 quantifier body, 1 or, 2 and, 3 unary/atom
void render_fo(const FOFormula& f, int level, std::string& out) {
  using K = FOFormula::Kind;
  switch (f.kind) {
    case K::forall:
    case K::exists: {
      bool parens = level > 0;
      if (parens) out += "(";
      out += f.kind == K::forall ? "forall " : "exists ";
      out += f.var + " . ";
      render_fo(f.children[0], 0, out);
      if (parens) out += ")";
      return;
    }
    case K::lor: {
      bool parens = level > 1;
      if (parens) out += "(";
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += " | ";
        render_fo(f.children[i], 2, out);
      }
      if (parens) out += ")";
      return;
    }
    case K::land: {
      bool parens = level > 2;
      if (parens) out += "(";
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += " & ";
        render_fo(f.children[i], 3, out);
      }
      if (parens) out += ")";
      return;
    }
    case K::lnot:
      out += "~";
      render_fo(f.children[0], 3, out);
      return;
    case K::equal:
      out += render_term(f.args[0]) + " = " + render_term(f.args[1]);
      return;
    case K::atomic: {
      out += f.pred;
      if (!f.args.empty()) {
        out += "(";
        for (size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ", ";
          out += render_term(f.args[i]);
        }
        out += ")";
      }
      return;
    }
  }
  throw internal_error("unreachable formula kind");
}

}  // namespace

std::string render_formula(const ContFormula& f) {
  std::string out;
  render_cont(f, 0, out);
  return out;
}

std::string render_formula(const FOFormula& f) {
  std::string out;
  render_fo(f, 0, out);
  return out;
}

}  // namespace cmt

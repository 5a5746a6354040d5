#include "cmt/parser.hpp"

#include <cctype>
#include <vector>

#include "cmt/errors.hpp"

namespace cmt {

namespace {

enum class Tok {
  ident,
  number,
  lparen,
  rparen,
  lbrack,
  rbrack,
  comma,
  dot,
  slash,
  subdot,  // -.
  adddot,  // +.
  tilde,
  amp,
  pipe,
  eq,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  long long number = 0;
  size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit((unsigned char)c)) {
      long long v = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        v = v * 10 + (s[i] - '0');
        if (v > (1ll << 40)) throw parse_error("number literal too large", start);
        ++i;
      }
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), v, start});
      continue;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), 0, start});
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), 0, start});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::lparen); break;
      case ')': single(Tok::rparen); break;
      case '[': single(Tok::lbrack); break;
      case ']': single(Tok::rbrack); break;
      case ',': single(Tok::comma); break;
      case '.': single(Tok::dot); break;
      case '/': single(Tok::slash); break;
      case '~': single(Tok::tilde); break;
      case '&': single(Tok::amp); break;
      case '|': single(Tok::pipe); break;
      case '=': single(Tok::eq); break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '.') {
          out.push_back({Tok::subdot, "-.", 0, start});
          i += 2;
        } else {
          throw parse_error("expected '-.'", start);
        }
        break;
      case '+':
        if (i + 1 < s.size() && s[i + 1] == '.') {
          out.push_back({Tok::adddot, "+.", 0, start});
          i += 2;
        } else {
          throw parse_error("expected '+.'", start);
        }
        break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::end, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& v) : toks_(tokenize(text)), v_(v) {}

  ContFormula cont() {
    ContFormula f = cont_formula();
    expect(Tok::end, "trailing input after formula");
    return normalize(f);
  }

  FOFormula fo() {
    FOFormula f = fo_formula();
    expect(Tok::end, "trailing input after formula");
    return normalize(f);
  }

 private:
  const Token& peek(int ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  Token take() { return toks_[at_ >= toks_.size() ? toks_.size() - 1 : at_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at_;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) throw parse_error(std::string("syntax error: expected ") + what, peek().pos);
    return take();
  }

  [[noreturn]] void fail(const std::string& msg, size_t pos) const { throw parse_error(msg, pos); }

  bool ident_is(const char* kw) const { return peek().kind == Tok::ident && peek().text == kw; }

  Value rational(bool require_dyadic) {
    Token n = expect(Tok::number, "a number");
    long long num = n.number, den = 1;
    if (accept(Tok::slash)) {
      Token d = expect(Tok::number, "a denominator");
      den = d.number;
      if (den <= 0) fail("syntax error: zero denominator", d.pos);
    }
    if (num < 0 || num > den) fail("constant out of [0,1]: " + std::to_string(num) + "/" + std::to_string(den), n.pos);
    Value v = Value::of(num, den);
    if (require_dyadic && !v.is_dyadic()) fail("non-dyadic constant: " + n.text + "/" + std::to_string(den), n.pos);
    return v;
  }

  Term term() {
    Token id = expect(Tok::ident, "a term");
    if (peek().kind == Tok::lparen) {
      int fi = v_.function_index(id.text);
      if (fi < 0) {
        if (v_.has_symbol(id.text)) fail("arity mismatch: " + id.text + " is not a function symbol", id.pos);
        fail("unknown symbol: " + id.text, id.pos);
      }
      take();  // (
      std::vector<Term> args;
      args.push_back(term());
      while (accept(Tok::comma)) args.push_back(term());
      expect(Tok::rparen, "')'");
      int arity = v_.functions()[fi].arity;
      if ((int)args.size() != arity)
        fail("arity mismatch: " + id.text + " expects " + std::to_string(arity) + " arguments", id.pos);
      return tapp(id.text, std::move(args));
    }
    if (v_.constant_index(id.text) >= 0) return tconst(id.text);
    if (v_.function_index(id.text) >= 0) fail("arity mismatch: function " + id.text + " needs arguments", id.pos);
    if (v_.predicate_index(id.text) >= 0) fail("syntax error: predicate " + id.text + " in term position", id.pos);
    return tvar(id.text);
  }

  std::vector<Term> atomic_args(const Token& id) {
    int pi = v_.predicate_index(id.text);
    if (pi < 0) {
      if (v_.has_symbol(id.text)) fail("syntax error: " + id.text + " is not a predicate", id.pos);
      fail("unknown symbol: " + id.text, id.pos);
    }
    int arity = v_.predicates()[pi].arity;
    std::vector<Term> args;
    if (accept(Tok::lparen)) {
      args.push_back(term());
      while (accept(Tok::comma)) args.push_back(term());
      expect(Tok::rparen, "')'");
    }
    if ((int)args.size() != arity)
      fail("arity mismatch: " + id.text + " expects " + std::to_string(arity) + " arguments", id.pos);
    return args;
  }

  // ---- continuous grammar ----

  ContFormula cont_formula() {
    if (ident_is("sup") || ident_is("inf")) {
      bool is_sup = peek().text == "sup";
      take();
      Token var = expect(Tok::ident, "a variable");
      if (v_.has_symbol(var.text)) fail("syntax error: bound variable " + var.text + " shadows a declared symbol", var.pos);
      expect(Tok::dot, "'.'");
      ContFormula body = cont_formula();
      return is_sup ? cf::sup(var.text, std::move(body)) : cf::inf(var.text, std::move(body));
    }
    ContFormula lhs = cont_primary();
    while (peek().kind == Tok::subdot || peek().kind == Tok::adddot) {
      bool is_sub = take().kind == Tok::subdot;
      ContFormula rhs = cont_primary();
      lhs = is_sub ? cf::sub(std::move(lhs), std::move(rhs)) : cf::add(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ContFormula cont_primary() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      take();
      ContFormula f = cont_formula();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (t.kind == Tok::number) return cf::constant(rational(/*require_dyadic=*/true));
    if (t.kind != Tok::ident) fail("syntax error: expected a formula", t.pos);

    if (t.text == "min" || t.text == "max") {
      bool is_min = t.text == "min";
      take();
      expect(Tok::lparen, "'('");
      std::vector<ContFormula> args;
      args.push_back(cont_formula());
      while (accept(Tok::comma)) args.push_back(cont_formula());
      expect(Tok::rparen, "')'");
      return is_min ? cf::min(std::move(args)) : cf::max(std::move(args));
    }
    if (t.text == "half") {
      take();
      expect(Tok::lparen, "'('");
      ContFormula f = cont_formula();
      expect(Tok::rparen, "')'");
      return cf::half(std::move(f));
    }
    if (t.text == "C" && peek(1).kind == Tok::lbrack) return connective_literal();
    if (t.text == "sup" || t.text == "inf") {
      ContFormula f = cont_formula();
      return f;
    }
    Token id = take();
    std::vector<Term> args = atomic_args(id);
    return cf::atomic(id.text, std::move(args));
  }

  ContFormula connective_literal() {
    Token c = take();  // C
    expect(Tok::lbrack, "'['");
    std::vector<MonotoneConnective::Point> pts;
    do {
      expect(Tok::lparen, "'('");
      Value x = rational(false);
      expect(Tok::comma, "','");
      Value y = rational(false);
      expect(Tok::rparen, "')'");
      pts.push_back({x, y});
    } while (accept(Tok::comma));
    expect(Tok::rbrack, "']'");
    expect(Tok::lparen, "'('");
    ContFormula arg = cont_formula();
    expect(Tok::rparen, "')'");
    try {
      return cf::apply(MonotoneConnective(std::move(pts)), std::move(arg));
    } catch (const vocab_error& e) {
      fail(std::string("bad connective literal: ") + e.what(), c.pos);
    }
  }

  // ---- first-order grammar ----

  FOFormula fo_formula() {
    if (ident_is("forall") || ident_is("exists")) {
      bool is_all = peek().text == "forall";
      take();
      Token var = expect(Tok::ident, "a variable");
      if (v_.has_symbol(var.text)) fail("syntax error: bound variable " + var.text + " shadows a declared symbol", var.pos);
      expect(Tok::dot, "'.'");
      FOFormula body = fo_formula();
      return is_all ? fo::forall(var.text, std::move(body)) : fo::exists(var.text, std::move(body));
    }
    return fo_or();
  }

  FOFormula fo_or() {
    FOFormula lhs = fo_and();
    if (peek().kind != Tok::pipe) return lhs;
    std::vector<FOFormula> parts;
    parts.push_back(std::move(lhs));
    while (accept(Tok::pipe)) parts.push_back(fo_and());
    return fo::lor(std::move(parts));
  }

  FOFormula fo_and() {
    FOFormula lhs = fo_unary();
    if (peek().kind != Tok::amp) return lhs;
    std::vector<FOFormula> parts;
    parts.push_back(std::move(lhs));
    while (accept(Tok::amp)) parts.push_back(fo_unary());
    return fo::land(std::move(parts));
  }

  FOFormula fo_unary() {
    if (accept(Tok::tilde)) return fo::lnot(fo_unary());
    return fo_atom();
  }

  FOFormula fo_atom() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      take();
      FOFormula f = fo_formula();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (t.kind != Tok::ident) fail("syntax error: expected a formula", t.pos);
    if (t.text == "forall" || t.text == "exists") return fo_formula();

    // predicate atom, unless the identifier starts a term of an equality
    if (v_.predicate_index(t.text) >= 0) {
      Token id = take();
      std::vector<Term> args = atomic_args(id);
      return fo::atomic(id.text, std::move(args));
    }
    Term lhs = term();
    expect(Tok::eq, "'=' after a term");
    Term rhs = term();
    return fo::equal(std::move(lhs), std::move(rhs));
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
  const Vocabulary& v_;
};

}  // namespace

ContFormula parse_cont_formula(std::string_view text, const Vocabulary& v) { return Parser(text, v).cont(); }

FOFormula parse_fo_formula(std::string_view text, const Vocabulary& v) { return Parser(text, v).fo(); }

}  // namespace cmt

#include "cmt/gen.hpp"

#include <algorithm>
#include <set>

#include "cmt/errors.hpp"
#include "cmt/translate.hpp"

namespace cmt {

const char* to_string(FormulaClass c) {
  switch (c) {
    case FormulaClass::full: return "full";
    case FormulaClass::quantifier_free: return "quantifier-free";
    case FormulaClass::restricted: return "restricted";
    case FormulaClass::conditional: return "conditional";
    case FormulaClass::horn: return "horn";
    case FormulaClass::existential: return "existential";
    case FormulaClass::universal: return "universal";
    case FormulaClass::positive: return "positive";
  }
  return "?";
}

std::optional<FormulaClass> formula_class_from_string(std::string_view s) {
  for (FormulaClass c : {FormulaClass::full, FormulaClass::quantifier_free, FormulaClass::restricted,
                         FormulaClass::conditional, FormulaClass::horn, FormulaClass::existential,
                         FormulaClass::universal, FormulaClass::positive})
    if (s == to_string(c)) return c;
  if (s == "qf") return FormulaClass::quantifier_free;
  return std::nullopt;
}

void validate(const InstanceSpec& spec) {
  auto bad = [](const std::string& msg) { throw vocab_error("unsatisfiable instance spec: " + msg); };
  if (spec.predicates < 1) bad("at least one predicate symbol is required");
  if (spec.max_pred_arity < 0) bad("negative predicate arity bound");
  if (spec.functions < 0 || spec.constants < 0) bad("negative symbol count");
  if (spec.functions > 0 && spec.max_fun_arity < 1) bad("function arity bound must be at least 1");
  if (spec.min_universe < 1 || spec.max_universe < spec.min_universe) bad("bad universe range");
  if (spec.max_index < 1) bad("index set must be nonempty");
  if (spec.depth < 0) bad("negative formula depth");
  if (spec.max_quantifiers < 0) bad("negative quantifier budget");
  if (spec.free_variables < 0) bad("negative free-variable count");
  if (spec.max_product_size < (std::size_t)spec.min_universe) bad("product size cap below the smallest universe");
  if (spec.grid_k < 1 || spec.grid_k > 20) bad("grid exponent out of range");
}

VocabPtr gen_vocabulary(Rng& rng, const InstanceSpec& spec) {
  auto v = std::make_shared<Vocabulary>();
  bool have_zero_ary = false;
  for (int i = 0; i < spec.predicates; ++i) {
    int a = rng.below(spec.max_pred_arity + 1);
    // with no constants a formula may have no ground term, so keep one
    // predicate directly usable
    if (i + 1 == spec.predicates && spec.constants == 0 && !have_zero_ary) a = 0;
    have_zero_ary |= a == 0;
    v->add_predicate("P" + std::to_string(i), a);
  }
  for (int i = 0; i < spec.functions; ++i) v->add_function("F" + std::to_string(i), 1 + rng.below(spec.max_fun_arity));
  for (int i = 0; i < spec.constants; ++i) v->add_constant("c" + std::to_string(i));
  return v;
}

namespace {

Value grid_value(Rng& rng, Grid g) {
  long long j = rng.below((int)g.den() + 1);
  return j == g.den() ? Value::one() : g.point(j);
}

}  // namespace

GeneralStructure gen_structure(Rng& rng, VocabPtr v, int universe, Grid g) {
  GeneralStructure m(std::move(v), universe);
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p)
    for (Value& cell : m.pred_table((int)p)) cell = grid_value(rng, g);
  for (size_t f = 0; f < m.vocab().functions().size(); ++f)
    for (int& cell : m.fun_table((int)f)) cell = rng.below(universe);
  for (size_t c = 0; c < m.vocab().constants().size(); ++c) m.set_constant((int)c, rng.below(universe));
  return m;
}

FOStructure gen_threshold_structure(Rng& rng, VocabPtr v, int universe, Grid g) {
  VocabPtr down = vocab_down(*v, g);
  FOStructure k(down, universe);
  int den = (int)g.den();
  for (size_t p = 0; p < v->predicates().size(); ++p) {
    const auto& pr = v->predicates()[p];
    std::vector<int> fo_idx(den);
    for (int j = 0; j < den; ++j) fo_idx[j] = down->predicate_index(threshold_name(pr.name, j, den));
    size_t cells = table_size(universe, pr.arity);
    for (size_t idx = 0; idx < cells; ++idx) {
      int cut = rng.below(den + 1);  // den = no threshold holds
      for (int j = 0; j < den; ++j) k.pred_table(fo_idx[j])[idx] = j >= cut ? 1 : 0;
    }
  }
  for (size_t f = 0; f < down->functions().size(); ++f)
    for (int& cell : k.fun_table((int)f)) cell = rng.below(universe);
  for (size_t c = 0; c < down->constants().size(); ++c) k.set_constant((int)c, rng.below(universe));
  return k;
}

Filter gen_filter(Rng& rng, int index_size) {
  if (index_size < 1 || index_size > 20) throw filter_error("index set size out of range for generation");
  unsigned mask = 1u + (unsigned)rng.below((1 << index_size) - 1);
  std::vector<int> kernel;
  for (int i = 0; i < index_size; ++i)
    if (mask & (1u << i)) kernel.push_back(i);
  return Filter(index_size, std::move(kernel));
}

MonotoneConnective gen_connective(Rng& rng, Grid g) {
  auto dyadic = [&] { return grid_value(rng, g); };
  switch (rng.below(6)) {
    case 0: return MonotoneConnective::identity();
    case 1: return MonotoneConnective::constant(dyadic());
    case 2: return MonotoneConnective::sub_const(dyadic());
    case 3: return MonotoneConnective::add_const(dyadic());
    case 4: return MonotoneConnective::half_map();
    default: break;
  }
  int interior = rng.below(3);
  std::set<long long> xs;
  while ((int)xs.size() < interior) xs.insert(1 + rng.below((int)g.den() - 1));
  std::vector<Value> ys(interior + 2);
  for (Value& y : ys) y = dyadic();
  std::sort(ys.begin(), ys.end());
  std::vector<MonotoneConnective::Point> pts;
  pts.push_back({Value::zero(), ys[0]});
  int at = 1;
  for (long long j : xs) pts.push_back({g.point(j), ys[at++]});
  pts.push_back({Value::one(), ys[at]});
  return MonotoneConnective(std::move(pts));
}

namespace {

struct GenCtx {
  Rng& rng;
  const Vocabulary& v;
  const InstanceSpec& spec;
  Grid grid;
  std::vector<std::string> scope;
  int quant_budget;
  int fresh = 0;

  bool can_ground() const { return !v.constants().empty() || !scope.empty(); }

  std::vector<int> usable_preds() const {
    std::vector<int> out;
    for (size_t p = 0; p < v.predicates().size(); ++p)
      if (v.predicates()[p].arity == 0 || can_ground()) out.push_back((int)p);
    return out;
  }

  Value dyadic() { return grid_value(rng, grid); }
  std::string fresh_var() { return "x" + std::to_string(fresh++); }
};

Term gen_term(GenCtx& c, int depth) {
  enum { VAR, CONST, FUN };
  std::vector<int> cats;
  if (!c.scope.empty()) cats.push_back(VAR);
  if (!c.v.constants().empty()) cats.push_back(CONST);
  if (depth > 0 && !c.v.functions().empty() && c.can_ground()) cats.push_back(FUN);
  if (cats.empty()) throw vocab_error("unsatisfiable instance spec: no ground term exists");
  switch (cats[c.rng.below((int)cats.size())]) {
    case VAR: return tvar(c.scope[c.rng.below((int)c.scope.size())]);
    case CONST: return tconst(c.v.constants()[c.rng.below((int)c.v.constants().size())].name);
    default: break;
  }
  const auto& f = c.v.functions()[c.rng.below((int)c.v.functions().size())];
  std::vector<Term> args;
  args.reserve(f.arity);
  for (int i = 0; i < f.arity; ++i) args.push_back(gen_term(c, depth - 1));
  return tapp(f.name, std::move(args));
}

std::vector<Term> gen_args(GenCtx& c, int arity) {
  std::vector<Term> args;
  args.reserve(arity);
  for (int i = 0; i < arity; ++i) args.push_back(gen_term(c, 2));
  return args;
}

ContFormula gen_atomic(GenCtx& c) {
  auto usable = c.usable_preds();
  if (usable.empty()) throw vocab_error("unsatisfiable instance spec: no atomic formula can be formed");
  const auto& p = c.v.predicates()[usable[c.rng.below((int)usable.size())]];
  return cf::atomic(p.name, gen_args(c, p.arity));
}

ContFormula gen_leaf(GenCtx& c) {
  if (!c.usable_preds().empty() && c.rng.chance(3, 4)) return gen_atomic(c);
  return cf::constant(c.dyadic());
}

ContFormula gen_rec(GenCtx& c, FormulaClass cls, int depth) {
  if (depth <= 0) return gen_leaf(c);
  enum Opt { LEAF, MIN, MAX, SUB, SUBC, ADD, HALF, APPLY, QSUP, QINF, QF };
  std::vector<Opt> opts{LEAF, MIN, MAX, ADD, HALF};
  bool quant = c.quant_budget > 0;
  switch (cls) {
    case FormulaClass::full:
      opts.insert(opts.end(), {SUB, APPLY});
      if (quant) opts.insert(opts.end(), {QSUP, QINF});
      break;
    case FormulaClass::quantifier_free:
      opts.insert(opts.end(), {SUB, APPLY});
      break;
    case FormulaClass::restricted:
      opts.push_back(SUB);
      if (quant) opts.insert(opts.end(), {QSUP, QINF});
      break;
    case FormulaClass::existential:
      opts.insert(opts.end(), {SUBC, APPLY, QF});
      if (quant) opts.push_back(QINF);
      break;
    case FormulaClass::universal:
      opts.insert(opts.end(), {SUBC, APPLY, QF});
      if (quant) opts.push_back(QSUP);
      break;
    case FormulaClass::positive:
      opts.insert(opts.end(), {SUBC, APPLY});
      if (quant) opts.insert(opts.end(), {QSUP, QINF});
      break;
    default:
      throw internal_error("gen_rec does not handle this class");
  }
  switch (opts[c.rng.below((int)opts.size())]) {
    case LEAF:
      return gen_leaf(c);
    case MIN:
    case MAX: {
      bool mn = c.rng.chance(1, 2);
      std::vector<ContFormula> kids;
      int n = 2 + c.rng.below(2);
      for (int i = 0; i < n; ++i) kids.push_back(gen_rec(c, cls, depth - 1));
      return mn ? cf::min(std::move(kids)) : cf::max(std::move(kids));
    }
    case SUB:
      return cf::sub(gen_rec(c, cls, depth - 1), gen_rec(c, cls, depth - 1));
    case SUBC:
      return cf::sub(gen_rec(c, cls, depth - 1), cf::constant(c.dyadic()));
    case ADD:
      return cf::add(gen_rec(c, cls, depth - 1), gen_rec(c, cls, depth - 1));
    case HALF:
      return cf::half(gen_rec(c, cls, depth - 1));
    case APPLY:
      return cf::apply(gen_connective(c.rng, c.grid), gen_rec(c, cls, depth - 1));
    case QSUP:
    case QINF: {
      bool up = c.rng.chance(1, 2);
      if (cls == FormulaClass::existential) up = false;
      if (cls == FormulaClass::universal) up = true;
      std::string x = c.fresh_var();
      c.scope.push_back(x);
      --c.quant_budget;
      ContFormula body = gen_rec(c, cls, depth - 1);
      c.scope.pop_back();
      return up ? cf::sup(x, std::move(body)) : cf::inf(x, std::move(body));
    }
    case QF:
      return gen_rec(c, FormulaClass::quantifier_free, depth - 1);
  }
  throw internal_error("unreachable");
}

ContFormula gen_primitive(GenCtx& c) {
  bool atomic_ok = !c.usable_preds().empty();
  int nparts = 1 + c.rng.below(3);
  int pos_slot = (atomic_ok && c.rng.chance(1, 2)) ? c.rng.below(nparts) : -1;
  std::vector<ContFormula> parts;
  for (int i = 0; i < nparts; ++i) {
    ContFormula leaf = i == pos_slot                       ? gen_atomic(c)
                       : atomic_ok && c.rng.chance(2, 3) ? cf::negate(gen_atomic(c))
                                                           : cf::constant(c.dyadic());
    switch (c.rng.below(6)) {
      case 0: leaf = cf::sub(std::move(leaf), cf::constant(c.dyadic())); break;
      case 1: leaf = cf::add(std::move(leaf), cf::constant(c.dyadic())); break;
      case 2: leaf = cf::half(std::move(leaf)); break;
      case 3: leaf = cf::apply(gen_connective(c.rng, c.grid), std::move(leaf)); break;
      default: break;
    }
    parts.push_back(std::move(leaf));
  }
  return parts.size() == 1 ? std::move(parts[0]) : cf::min(std::move(parts));
}

ContFormula gen_cond(GenCtx& c, int depth) {
  if (depth <= 0) return gen_primitive(c);
  int pick = c.rng.below(4);
  if (pick <= 1 && c.quant_budget > 0) {
    std::string x = c.fresh_var();
    c.scope.push_back(x);
    --c.quant_budget;
    ContFormula body = gen_cond(c, depth - 1);
    c.scope.pop_back();
    return pick == 0 ? cf::sup(x, std::move(body)) : cf::inf(x, std::move(body));
  }
  if (pick == 2) {
    int n = 2 + c.rng.below(2);
    std::vector<ContFormula> kids;
    for (int i = 0; i < n; ++i) kids.push_back(gen_cond(c, depth - 1));
    return cf::max(std::move(kids));
  }
  return gen_primitive(c);
}

FOFormula gen_fo_atomic(GenCtx& c) {
  auto usable = c.usable_preds();
  if (usable.empty()) throw vocab_error("unsatisfiable instance spec: no atomic formula can be formed");
  const auto& p = c.v.predicates()[usable[c.rng.below((int)usable.size())]];
  return fo::atomic(p.name, gen_args(c, p.arity));
}

FOFormula gen_horn_clause(GenCtx& c) {
  int nlits = 1 + c.rng.below(3);
  int pos_slot = c.rng.chance(1, 2) ? c.rng.below(nlits) : -1;
  std::vector<FOFormula> lits;
  for (int i = 0; i < nlits; ++i) {
    FOFormula a = gen_fo_atomic(c);
    lits.push_back(i == pos_slot ? std::move(a) : fo::lnot(std::move(a)));
  }
  return nlits == 1 ? std::move(lits[0]) : fo::lor(std::move(lits));
}

FOFormula gen_horn_rec(GenCtx& c, int depth) {
  if (depth <= 0) return gen_horn_clause(c);
  int pick = c.rng.below(4);
  if (pick <= 1 && c.quant_budget > 0) {
    std::string x = c.fresh_var();
    c.scope.push_back(x);
    --c.quant_budget;
    FOFormula body = gen_horn_rec(c, depth - 1);
    c.scope.pop_back();
    return pick == 0 ? fo::forall(x, std::move(body)) : fo::exists(x, std::move(body));
  }
  if (pick == 2) {
    int n = 2 + c.rng.below(2);
    std::vector<FOFormula> kids;
    for (int i = 0; i < n; ++i) kids.push_back(gen_horn_rec(c, depth - 1));
    return fo::land(std::move(kids));
  }
  return gen_horn_clause(c);
}

void check_closed(const std::set<std::string>& fv, int declared_free) {
  for (const std::string& x : fv) {
    bool ok = false;
    for (int i = 0; i < declared_free; ++i) ok |= x == "v" + std::to_string(i);
    if (!ok) throw internal_error("generated formula has stray free variable " + x);
  }
}

}  // namespace

ContFormula gen_formula(Rng& rng, const Vocabulary& v, const InstanceSpec& spec) {
  if (spec.formula_class == FormulaClass::horn) return fo_to_cont(gen_horn_sentence(rng, v, spec));
  GenCtx c{rng, v, spec, Grid(spec.grid_k), {}, spec.max_quantifiers, 0};
  for (int i = 0; i < spec.free_variables; ++i) c.scope.push_back("v" + std::to_string(i));
  ContFormula f = spec.formula_class == FormulaClass::conditional ? gen_cond(c, spec.depth)
                                                                  : gen_rec(c, spec.formula_class, spec.depth);
  f = normalize(f);
  check_closed(free_vars(f), spec.free_variables);
  return f;
}

FOFormula gen_horn_sentence(Rng& rng, const Vocabulary& v, const InstanceSpec& spec) {
  GenCtx c{rng, v, spec, Grid(spec.grid_k), {}, spec.max_quantifiers, 0};
  for (int i = 0; i < spec.free_variables; ++i) c.scope.push_back("v" + std::to_string(i));
  FOFormula f = normalize(gen_horn_rec(c, spec.depth));
  check_closed(free_vars(f), spec.free_variables);
  return f;
}

std::pair<std::vector<GeneralStructure>, Filter> gen_family(Rng& rng, VocabPtr v, const InstanceSpec& spec) {
  Grid g(spec.grid_k);
  int m = 1 + rng.below(spec.max_index);
  std::vector<GeneralStructure> factors;
  std::size_t prod = 1;
  for (int i = 0; i < m; ++i) {
    int n = spec.min_universe + rng.below(spec.max_universe - spec.min_universe + 1);
    while (n > 1 && prod * (std::size_t)n > spec.max_product_size) --n;
    prod *= (std::size_t)n;
    factors.push_back(gen_structure(rng, v, n, g));
  }
  Filter f = spec.filter_spec.empty() ? gen_filter(rng, m) : parse_filter_spec(spec.filter_spec, m);
  return {std::move(factors), std::move(f)};
}

Instance gen_instance(const InstanceSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  VocabPtr vocab = gen_vocabulary(rng, spec);
  auto [factors, f] = gen_family(rng, vocab, spec);
  ContFormula phi = gen_formula(rng, *vocab, spec);
  return Instance{std::move(vocab), std::move(factors), std::move(f), std::move(phi)};
}

}  // namespace cmt

#include "cmt/harness.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "cmt/classify.hpp"
#include "cmt/downup.hpp"
#include "cmt/errors.hpp"
#include "cmt/eval.hpp"
#include "cmt/morphism.hpp"
#include "cmt/printer.hpp"
#include "cmt/translate.hpp"

namespace cmt {

using json = nlohmann::ordered_json;

PreservationTrial check_preservation(const IndexedFamily& fam, const Filter& f, const ContFormula& phi, Value eps,
                                     const ProductOptions& opts) {
  if (!is_sentence(phi)) throw eval_error("preservation checks need a sentence");
  PreservationTrial t;
  t.eps = eps;
  t.kernel = f.kernel();
  std::vector<int> low;
  for (int i = 0; i < fam.size(); ++i) {
    t.factor_values.push_back(eval_formula(fam.factor(i), phi));
    if (t.factor_values.back() <= eps) low.push_back(i);
  }
  t.product_value = eval_formula(pre_reduced_product(fam, f, opts), phi);
  t.hypothesis = f.contains(low);
  t.violated = t.hypothesis && t.product_value > eps;
  return t;
}

LimsupBound check_limsup_bound(const IndexedFamily& fam, const Filter& f, const ContFormula& phi,
                               const ProductOptions& opts) {
  if (!is_sentence(phi)) throw eval_error("the limsup bound needs a sentence");
  ContClassification cls = classify_cont(phi);
  if (!cls.conditional)
    throw vocab_error("the limsup bound holds for conditional sentences; first violation " +
                      cls.witnesses.at("conditional"));
  LimsupBound b;
  std::vector<Value> values;
  for (int i = 0; i < fam.size(); ++i) values.push_back(eval_formula(fam.factor(i), phi));
  b.kernel_max = limsup(f, values);
  b.product_value = eval_formula(pre_reduced_product(fam, f, opts), phi);
  b.ok = b.product_value <= b.kernel_max;
  return b;
}

namespace {

std::vector<Value> eps_sweep(Grid g, const std::vector<Value>& factor_values) {
  std::vector<Value> eps;
  for (long long j = 0; j < g.den(); ++j) eps.push_back(g.point(j));
  eps.push_back(Value::one());
  eps.insert(eps.end(), factor_values.begin(), factor_values.end());
  std::sort(eps.begin(), eps.end());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  return eps;
}

}  // namespace

std::optional<CounterexampleWitness> search_counterexample(VocabPtr vocab, const ContFormula& phi,
                                                           const InstanceSpec& budget) {
  if (!is_sentence(phi)) throw eval_error("counterexample search needs a sentence");
  validate(budget);
  Grid g(budget.grid_k);
  ProductOptions popts;
  popts.max_universe = budget.max_product_size;
  for (std::uint64_t trial = 0; trial < budget.trials; ++trial) {
    std::uint64_t seed = derive_seed(budget.seed, trial);
    Rng rng(seed);
    auto [factors, filter] = gen_family(rng, vocab, budget);
    IndexedFamily fam(factors);
    std::vector<Value> values;
    for (int i = 0; i < fam.size(); ++i) values.push_back(eval_formula(fam.factor(i), phi));
    Value product = eval_formula(pre_reduced_product(fam, filter, popts), phi);
    for (Value eps : eps_sweep(g, values)) {
      std::vector<int> low;
      for (int i = 0; i < fam.size(); ++i)
        if (values[i] <= eps) low.push_back(i);
      if (filter.contains(low) && product > eps) {
        return CounterexampleWitness{trial, seed, std::move(factors), filter, eps, values, product};
      }
    }
  }
  return std::nullopt;
}

VocabPtr example_vocabulary() {
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P", 0);
  v->add_predicate("Q", 0);
  return v;
}

ContFormula example_sentence() {
  ContFormula pq = cf::min({cf::atomic("P"), cf::atomic("Q")});
  return normalize(cf::min({cf::atomic("P"), cf::atomic("Q"), cf::negate(pq)}));
}

ExampleReproduction reproduce_example(Value r) {
  VocabPtr v = example_vocabulary();
  GeneralStructure m1(v, 1), m2(v, 1);
  m1.set_pred(0, {}, r);             // P = r, Q = 0
  m2.set_pred(1, {}, r);             // P = 0, Q = r
  IndexedFamily fam({m1, m2});
  Filter full = Filter::full(2);
  ContFormula theta = example_sentence();
  ExampleReproduction out;
  out.r = r;
  out.factor_value_1 = eval_formula(m1, theta);
  out.factor_value_2 = eval_formula(m2, theta);
  out.product_value = eval_formula(pre_reduced_product(fam, full), theta);
  out.violated_at_zero = check_preservation(fam, full, theta, Value::zero()).violated;
  return out;
}

QuotientMap leibniz_bruteforce(const GeneralStructure& m, int max_term_depth) {
  int n = m.universe();
  const Vocabulary& v = m.vocab();

  // all maps a -> t(a) for terms t(x) with parameters, up to the depth bound
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> fns;
  auto add = [&](std::vector<int> f) {
    if (seen.insert(f).second) fns.push_back(std::move(f));
  };
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  add(id);
  for (int e = 0; e < n; ++e) add(std::vector<int>(n, e));  // parameters cover constants too

  for (int depth = 1; depth <= max_term_depth; ++depth) {
    size_t snapshot = fns.size();
    for (size_t f = 0; f < v.functions().size(); ++f) {
      int arity = v.functions()[f].arity;
      std::vector<int> pick(arity, 0);
      std::vector<int> args(arity);
      do {
        std::vector<int> composed(n);
        for (int a = 0; a < n; ++a) {
          for (int i = 0; i < arity; ++i) args[i] = fns[pick[i]][a];
          composed[a] = m.fun((int)f, args);
        }
        add(std::move(composed));
      } while (next_tuple(pick, (int)snapshot));
    }
  }

  std::map<std::vector<Value>, std::vector<int>> groups;
  for (int a = 0; a < n; ++a) {
    std::vector<Value> sig;
    for (size_t p = 0; p < v.predicates().size(); ++p) {
      int arity = v.predicates()[p].arity;
      std::vector<int> pick(arity, 0);
      std::vector<int> args(arity);
      do {
        for (int i = 0; i < arity; ++i) args[i] = fns[pick[i]][a];
        sig.push_back(m.pred((int)p, args));
      } while (next_tuple(pick, (int)fns.size()));
    }
    groups[std::move(sig)].push_back(a);
  }

  QuotientMap q;
  q.block_of.assign(n, -1);
  for (auto& [sig, members] : groups) q.blocks.push_back(members);
  std::sort(q.blocks.begin(), q.blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  for (size_t b = 0; b < q.blocks.size(); ++b)
    for (int a : q.blocks[b]) q.block_of[a] = (int)b;
  return q;
}

std::pair<GeneralStructure, std::vector<int>> gen_substructure(Rng& rng, const GeneralStructure& m) {
  int n = m.universe();
  std::set<int> closed;
  closed.insert(rng.below(n));
  for (int e = 0; e < n; ++e)
    if (rng.chance(1, 3)) closed.insert(e);
  for (size_t c = 0; c < m.vocab().constants().size(); ++c) closed.insert(m.constant((int)c));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members(closed.begin(), closed.end());
    for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
      int arity = m.vocab().functions()[f].arity;
      std::vector<int> pick(arity, 0);
      std::vector<int> args(arity);
      do {
        for (int i = 0; i < arity; ++i) args[i] = members[pick[i]];
        grew |= closed.insert(m.fun((int)f, args)).second;
      } while (next_tuple(pick, (int)members.size()));
    }
  }

  std::vector<int> h(closed.begin(), closed.end());
  std::vector<int> inv(n, -1);
  for (size_t i = 0; i < h.size(); ++i) inv[h[i]] = (int)i;

  GeneralStructure sub(m.vocab_ptr(), (int)h.size());
  std::vector<int> args, mapped;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int arity = m.vocab().predicates()[p].arity;
    args.assign(arity, 0);
    size_t idx = 0;
    do {
      mapped.clear();
      for (int a : args) mapped.push_back(h[a]);
      sub.pred_table((int)p)[idx++] = m.pred((int)p, mapped);
    } while (next_tuple(args, (int)h.size()));
  }
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int arity = m.vocab().functions()[f].arity;
    args.assign(arity, 0);
    size_t idx = 0;
    do {
      mapped.clear();
      for (int a : args) mapped.push_back(h[a]);
      sub.fun_table((int)f)[idx++] = inv[m.fun((int)f, mapped)];
    } while (next_tuple(args, (int)h.size()));
  }
  for (size_t c = 0; c < m.vocab().constants().size(); ++c) sub.set_constant((int)c, inv[m.constant((int)c)]);
  return {std::move(sub), std::move(h)};
}

std::pair<GeneralStructure, std::vector<int>> gen_hom_source(Rng& rng, const GeneralStructure& n, int size, Grid g) {
  int nn = n.universe();
  if (size < nn) throw internal_error("hom source must be at least as large as the target");
  std::vector<int> h(size);
  std::iota(h.begin(), h.begin() + nn, 0);  // guarantees the map is onto
  for (int i = nn; i < size; ++i) h[i] = rng.below(nn);
  for (int i = size - 1; i > 0; --i) std::swap(h[i], h[rng.below(i + 1)]);

  std::vector<std::vector<int>> fiber(nn);
  for (int i = 0; i < size; ++i) fiber[h[i]].push_back(i);

  GeneralStructure m(n.vocab_ptr(), size);
  std::vector<int> args, mapped;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int arity = m.vocab().predicates()[p].arity;
    args.assign(arity, 0);
    size_t idx = 0;
    do {
      mapped.clear();
      for (int a : args) mapped.push_back(h[a]);
      Value base = n.pred((int)p, mapped);
      // anything >= the image value keeps h a homomorphism
      Value val = base;
      if (!base.is_one()) {
        long long lo = 0;
        while (lo < g.den() && g.point(lo) < base) ++lo;
        long long j = lo + rng.below((int)(g.den() - lo + 1));
        val = j >= g.den() ? Value::one() : g.point(j);
      }
      m.pred_table((int)p)[idx++] = val;
    } while (next_tuple(args, size));
  }
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int arity = m.vocab().functions()[f].arity;
    args.assign(arity, 0);
    size_t idx = 0;
    do {
      mapped.clear();
      for (int a : args) mapped.push_back(h[a]);
      const std::vector<int>& fib = fiber[n.fun((int)f, mapped)];
      m.fun_table((int)f)[idx++] = fib[rng.below((int)fib.size())];
    } while (next_tuple(args, size));
  }
  for (size_t c = 0; c < m.vocab().constants().size(); ++c) {
    const std::vector<int>& fib = fiber[n.constant((int)c)];
    m.set_constant((int)c, fib[rng.below((int)fib.size())]);
  }
  return {std::move(m), std::move(h)};
}

namespace {

struct TrialRec {
  std::uint64_t seed = 0;
  bool ok = true;
  std::string note;
};

json spec_json(const InstanceSpec& s) {
  json j;
  j["seed"] = std::to_string(s.seed);
  j["trials"] = s.trials;
  j["grid_k"] = s.grid_k;
  j["predicates"] = s.predicates;
  j["max_pred_arity"] = s.max_pred_arity;
  j["functions"] = s.functions;
  j["max_fun_arity"] = s.max_fun_arity;
  j["constants"] = s.constants;
  j["universe"] = {s.min_universe, s.max_universe};
  j["max_index"] = s.max_index;
  j["formula_class"] = to_string(s.formula_class);
  j["depth"] = s.depth;
  j["max_quantifiers"] = s.max_quantifiers;
  j["max_product_size"] = s.max_product_size;
  return j;
}

SuiteResult finalize(const std::string& name, const SuiteOptions& opts, const std::vector<TrialRec>& recs,
                     std::uint64_t checks, json extra = json::object()) {
  SuiteResult res;
  res.suite = name;
  res.checks = checks;
  for (const TrialRec& r : recs)
    if (!r.ok) {
      ++res.violations;
      if (res.first_violation.empty()) res.first_violation = r.note;
    }
  res.pass = res.violations == 0;

  json j;
  j["suite"] = name;
  j["options"] = spec_json(opts.spec);
  j["pass"] = res.pass;
  j["checks"] = checks;
  j["violations"] = res.violations;
  j["first_violation"] = res.first_violation;
  for (auto& [key, val] : extra.items()) j[key] = val;
  json trials = json::array();
  for (size_t i = 0; i < recs.size(); ++i) {
    json t;
    t["trial"] = i;
    t["seed"] = std::to_string(recs[i].seed);
    t["ok"] = recs[i].ok;
    if (!recs[i].ok) t["note"] = recs[i].note;
    trials.push_back(std::move(t));
  }
  j["trials"] = std::move(trials);
  res.report_json = j.dump(2) + "\n";
  return res;
}

std::string values_str(const std::vector<Value>& vs) {
  std::string s = "(";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += vs[i].str();
  }
  return s + ")";
}

SuiteResult suite_example_reproduction(const SuiteOptions& opts) {
  std::vector<TrialRec> recs;
  json cases = json::array();
  for (Value r : {Value::of(1, 4), Value::of(1, 2)}) {
    ExampleReproduction e = reproduce_example(r);
    TrialRec rec;
    bool exact = e.factor_value_1.is_zero() && e.factor_value_2.is_zero() && e.product_value == r;
    rec.ok = exact && e.violated_at_zero;
    if (!rec.ok)
      rec.note = "r=" + r.str() + ": factors " + e.factor_value_1.str() + "," + e.factor_value_2.str() +
                 " product " + e.product_value.str();
    recs.push_back(rec);
    json c;
    c["r"] = r.str();
    c["factor_values"] = {e.factor_value_1.str(), e.factor_value_2.str()};
    c["product_value"] = e.product_value.str();
    c["violated_at_eps_zero"] = e.violated_at_zero;
    cases.push_back(std::move(c));
  }
  json extra;
  extra["sentence"] = render_formula(example_sentence());
  extra["cases"] = std::move(cases);
  return finalize("example-reproduction", opts, recs, recs.size(), std::move(extra));
}

SuiteResult suite_conditional_preservation(const SuiteOptions& opts) {
  InstanceSpec base = opts.spec;
  base.formula_class = FormulaClass::conditional;
  Grid g(base.grid_k);
  std::vector<TrialRec> recs(base.trials);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long long t = 0; t < (long long)base.trials; ++t) {
    InstanceSpec spec = base;
    spec.seed = derive_seed(base.seed, (std::uint64_t)t);
    TrialRec& rec = recs[t];
    rec.seed = spec.seed;
    Instance inst = gen_instance(spec);
    if (!classify_cont(inst.formula).conditional) {
      rec.ok = false;
      rec.note = "generator produced a non-conditional formula: " + render_formula(inst.formula);
      continue;
    }
    IndexedFamily fam(inst.factors);
    std::vector<Value> values;
    for (int i = 0; i < fam.size(); ++i) values.push_back(eval_formula(fam.factor(i), inst.formula));
    for (Value eps : eps_sweep(g, values)) {
      PreservationTrial p = check_preservation(fam, inst.filter, inst.formula, eps);
      if (p.violated) {
        rec.ok = false;
        rec.note = "eps=" + eps.str() + " factors " + values_str(p.factor_values) + " product " +
                   p.product_value.str() + " formula " + render_formula(inst.formula);
        break;
      }
    }
    if (rec.ok) {
      LimsupBound b = check_limsup_bound(fam, inst.filter, inst.formula);
      if (!b.ok) {
        rec.ok = false;
        rec.note = "product " + b.product_value.str() + " exceeds kernel max " + b.kernel_max.str() + " formula " +
                   render_formula(inst.formula);
      }
    }
  }
  return finalize("conditional-preservation", opts, recs, base.trials);
}

SuiteResult suite_limsup_identity(const SuiteOptions& opts) {
  std::uint64_t per_size = opts.spec.trials;
  std::vector<TrialRec> recs;
  std::uint64_t checks = 0;
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t t = 0; t < per_size; ++t) {
      TrialRec rec;
      rec.seed = derive_seed(opts.spec.seed, ((std::uint64_t)n << 32) | t);
      Rng rng(rec.seed);
      Grid g(opts.spec.grid_k);
      std::vector<Value> x(n);
      for (Value& v : x) {
        long long j = rng.below((int)g.den() + 1);
        v = j == g.den() ? Value::one() : g.point(j);
      }
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> kernel;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) kernel.push_back(i);
        Filter f(n, kernel);
        Value fast = limsup(f, x);
        Value slow = limsup_by_definition(f, x);
        Value ultra = Value::zero();
        for (const Filter& d : ultrafilters_extending(f)) ultra = vmax(ultra, limsup(d, x));
        ++checks;
        if (fast != slow || fast != ultra) {
          rec.ok = false;
          rec.note = "values " + values_str(x) + " kernel " + values_str({}) + "size " +
                     std::to_string(kernel.size()) + ": " + fast.str() + " vs " + slow.str() + " vs " + ultra.str();
          break;
        }
      }
      recs.push_back(rec);
    }
  }
  return finalize("limsup-identity", opts, recs, checks);
}

SuiteResult suite_los(const SuiteOptions& opts) {
  InstanceSpec base = opts.spec;
  base.formula_class = FormulaClass::full;
  base.free_variables = 2;
  std::vector<TrialRec> recs(base.trials);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long long t = 0; t < (long long)base.trials; ++t) {
    TrialRec& rec = recs[t];
    rec.seed = derive_seed(base.seed, (std::uint64_t)t);
    Rng rng(rec.seed);
    VocabPtr vocab = gen_vocabulary(rng, base);
    InstanceSpec nospec = base;
    nospec.filter_spec.clear();
    auto [factors, drawn] = gen_family(rng, vocab, nospec);
    (void)drawn;
    IndexedFamily fam(factors);
    int point = rng.below(fam.size());
    Filter d = Filter::principal(fam.size(), point);
    ContFormula phi = gen_formula(rng, *vocab, base);
    GeneralStructure prod = pre_reduced_product(fam, d);
    Assignment prod_a, factor_a;
    for (int i = 0; i < base.free_variables; ++i) {
      size_t e = (size_t)rng.below((int)prod.universe());
      prod_a["v" + std::to_string(i)] = (int)e;
      factor_a["v" + std::to_string(i)] = fam.coords(e)[point];
    }
    Value lhs = eval_formula(prod, phi, prod_a);
    Value rhs = eval_formula(fam.factor(point), phi, factor_a);
    if (lhs != rhs) {
      rec.ok = false;
      rec.note = "product " + lhs.str() + " != factor " + rhs.str() + " at point " + std::to_string(point) +
                 " formula " + render_formula(phi);
    }
  }
  return finalize("los", opts, recs, base.trials);
}

SuiteResult suite_leibniz_oracle(const SuiteOptions& opts) {
  InstanceSpec base = opts.spec;
  std::vector<TrialRec> recs(base.trials);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long long t = 0; t < (long long)base.trials; ++t) {
    TrialRec& rec = recs[t];
    rec.seed = derive_seed(base.seed, (std::uint64_t)t);
    Rng rng(rec.seed);
    InstanceSpec spec = base;
    spec.predicates = 1 + (int)(t % 2);
    spec.max_pred_arity = 2;
    spec.functions = (int)(t % 3);
    spec.max_fun_arity = 1;
    spec.constants = (int)(t % 2);
    VocabPtr vocab = gen_vocabulary(rng, spec);
    int universe = 1 + rng.below(4);
    GeneralStructure m = gen_structure(rng, vocab, universe, Grid(spec.grid_k));
    QuotientMap fast = leibniz_partition(m);
    QuotientMap slow = leibniz_bruteforce(m, 3);
    if (fast.block_of != slow.block_of) {
      rec.ok = false;
      rec.note = "refinement found " + std::to_string(fast.blocks.size()) + " blocks, enumeration " +
                 std::to_string(slow.blocks.size());
    }
  }
  return finalize("leibniz-oracle", opts, recs, base.trials);
}

SuiteResult suite_downup_roundtrip(const SuiteOptions& opts) {
  InstanceSpec base = opts.spec;
  Grid g(base.grid_k);
  std::vector<TrialRec> recs(base.trials);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long long t = 0; t < (long long)base.trials; ++t) {
    TrialRec& rec = recs[t];
    rec.seed = derive_seed(base.seed, (std::uint64_t)t);
    Rng rng(rec.seed);
    VocabPtr vocab = gen_vocabulary(rng, base);
    int universe = base.min_universe + rng.below(base.max_universe - base.min_universe + 1);
    GeneralStructure m = reduce_structure(gen_structure(rng, vocab, universe, g)).first;
    std::vector<std::string> warnings;
    FOStructure down = structure_down(m, g, &warnings);
    std::string violation;
    if (!warnings.empty()) {
      rec.ok = false;
      rec.note = "unexpected off-grid warning: " + warnings[0];
    } else if (!is_increasing(down, &violation)) {
      rec.ok = false;
      rec.note = "translation is not increasing: " + violation;
    } else if (!find_isomorphism(structure_up(down, g), m)) {
      rec.ok = false;
      rec.note = "round trip is not isomorphic to the original";
    }
  }
  return finalize("downup-roundtrip", opts, recs, base.trials);
}

SuiteResult suite_product_commutation(const SuiteOptions& opts) {
  InstanceSpec base = opts.spec;
  Grid g(base.grid_k);
  std::vector<TrialRec> recs(base.trials);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long long t = 0; t < (long long)base.trials; ++t) {
    TrialRec& rec = recs[t];
    rec.seed = derive_seed(base.seed, (std::uint64_t)t);
    Rng rng(rec.seed);
    InstanceSpec spec = base;
    VocabPtr vocab = gen_vocabulary(rng, spec);
    int m = 1 + rng.below(spec.max_index);
    std::vector<int> sizes;
    std::size_t prod = 1;
    for (int i = 0; i < m; ++i) {
      int n = spec.min_universe + rng.below(spec.max_universe - spec.min_universe + 1);
      while (n > 1 && prod * (std::size_t)n > spec.max_product_size) --n;
      prod *= (std::size_t)n;
      sizes.push_back(n);
    }
    Filter f = gen_filter(rng, m);

    // two-valued route: lift each factor, multiply; versus multiply, lift
    std::vector<FOStructure> ks;
    for (int i = 0; i < m; ++i) ks.push_back(gen_threshold_structure(rng, vocab, sizes[i], g));
    std::vector<GeneralStructure> lifted;
    for (const FOStructure& k : ks) lifted.push_back(structure_up(k, g));
    GeneralStructure lhs = reduced_product(IndexedFamily(lifted), f).first;
    GeneralStructure rhs = structure_up(fo_reduced_product(ks, f), g);
    if (!find_isomorphism(lhs, rhs)) {
      rec.ok = false;
      rec.note = "threshold-family commutation failed";
      continue;
    }

    // grid-valued route: reduced product versus down, multiply, up
    std::vector<GeneralStructure> ms;
    for (int i = 0; i < m; ++i) ms.push_back(reduce_structure(gen_structure(rng, vocab, sizes[i], g)).first);
    std::vector<FOStructure> downs;
    for (const GeneralStructure& mi : ms) downs.push_back(structure_down(mi, g));
    GeneralStructure lhs2 = reduced_product(IndexedFamily(ms), f).first;
    GeneralStructure rhs2 = structure_up(fo_reduced_product(downs, f), g);
    if (!find_isomorphism(lhs2, rhs2)) {
      rec.ok = false;
      rec.note = "grid-family commutation failed";
    }
  }
  return finalize("product-commutation", opts, recs, 2 * base.trials);
}

SuiteResult suite_morphism_monotonicity(const SuiteOptions& opts) {
  InstanceSpec base = opts.spec;
  Grid g(base.grid_k);
  enum Kind { SUBSTRUCTURE, QUOTIENT, HOM };
  std::vector<TrialRec> recs(3 * base.trials);
  std::uint64_t checks = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : checks) if (opts.parallel)
  for (long long idx = 0; idx < (long long)(3 * base.trials); ++idx) {
    Kind kind = (Kind)(idx / (long long)base.trials);
    std::uint64_t t = (std::uint64_t)(idx % (long long)base.trials);
    TrialRec& rec = recs[idx];
    rec.seed = derive_seed(base.seed, ((std::uint64_t)kind << 40) | t);
    Rng rng(rec.seed);
    VocabPtr vocab = gen_vocabulary(rng, base);
    auto fail = [&](const std::string& note) {
      rec.ok = false;
      rec.note = note;
    };

    if (kind == HOM) {
      GeneralStructure n = gen_structure(rng, vocab, 1 + rng.below(3), g);
      auto [m, h] = gen_hom_source(rng, n, n.universe() + rng.below(2), g);
      MorphismReport rep = check_morphism(m, n, h, MorphismKind::homomorphism);
      ++checks;
      if (!rep.ok) {
        fail("generated map is not a homomorphism: " + rep.violation);
        continue;
      }
      InstanceSpec fs = base;
      fs.formula_class = FormulaClass::positive;
      fs.free_variables = 1;
      ContFormula phi = gen_formula(rng, *vocab, fs);
      int a = rng.below(m.universe());
      ++checks;
      if (eval_formula(m, phi, {{"v0", a}}) < eval_formula(n, phi, {{"v0", h[a]}}))
        fail("positive formula grew along the homomorphism: " + render_formula(phi));
      continue;
    }

    GeneralStructure big = gen_structure(rng, vocab, 2 + rng.below(3), g);
    GeneralStructure m = kind == SUBSTRUCTURE ? GeneralStructure(vocab, 1) : big;
    GeneralStructure n = kind == SUBSTRUCTURE ? big : GeneralStructure(vocab, 1);
    std::vector<int> h;
    if (kind == SUBSTRUCTURE) {
      auto [sub, inc] = gen_substructure(rng, big);
      m = std::move(sub);
      h = std::move(inc);
    } else {
      auto [red, q] = reduce_structure(big);
      n = std::move(red);
      h = q.block_of;
    }
    MorphismReport rep = check_morphism(m, n, h, MorphismKind::embedding);
    ++checks;
    if (!rep.ok) {
      fail("generated map is not an embedding: " + rep.violation);
      continue;
    }
    int a = rng.below(m.universe());
    Assignment am{{"v0", a}}, an{{"v0", h[a]}};
    for (FormulaClass cls : {FormulaClass::existential, FormulaClass::universal, FormulaClass::quantifier_free}) {
      InstanceSpec fs = base;
      fs.formula_class = cls;
      fs.free_variables = 1;
      ContFormula phi = gen_formula(rng, *vocab, fs);
      Value vm = eval_formula(m, phi, am);
      Value vn = eval_formula(n, phi, an);
      bool ok = cls == FormulaClass::existential   ? vm >= vn
                : cls == FormulaClass::universal ? vm <= vn
                                                   : vm == vn;
      ++checks;
      if (!ok) {
        fail(std::string(to_string(cls)) + " value " + vm.str() + " vs " + vn.str() + " formula " +
             render_formula(phi));
        break;
      }
    }
  }
  json extra;
  extra["kinds"] = {"substructure-embedding", "quotient-embedding", "onto-homomorphism"};
  return finalize("morphism-monotonicity", opts, recs, checks, std::move(extra));
}

SuiteResult suite_basic_lemma(const SuiteOptions& opts) {
  // Value sequences live on the denominator-8 grid (indices 0..8 for j/8).
  // Only kernel coordinates matter on either side: membership of the
  // hypothesis set is containment of the kernel, and each limsup is the max
  // over the kernel, so the scan runs over kernel profiles directly.
  const int den = 8;
  const int vals = den + 1;
  std::vector<MonotoneConnective> fam = {
      MonotoneConnective::identity(),
      MonotoneConnective::constant(Value::zero()),
      MonotoneConnective::constant(Value::of(1, 2)),
      MonotoneConnective::sub_const(Value::of(3, 8)),
      MonotoneConnective::add_const(Value::of(1, 4)),
      MonotoneConnective::half_map(),
      MonotoneConnective({{Value::zero(), Value::zero()}, {Value::of(1, 8), Value::one()}, {Value::one(), Value::one()}}),
      MonotoneConnective(
          {{Value::zero(), Value::zero()}, {Value::of(1, 2), Value::zero()}, {Value::of(5, 8), Value::one()}, {Value::one(), Value::one()}}),
  };
  const int nf = (int)fam.size();

  struct Combo {
    std::array<int, 3> conn;
    int n;
  };
  std::vector<Combo> combos;
  for (int n = 0; n <= 2; ++n) {
    std::array<int, 3> pick{0, 0, 0};
    std::vector<int> odo(n + 1, 0);
    do {
      for (int i = 0; i <= n; ++i) pick[i] = odo[i];
      combos.push_back({pick, n});
    } while (next_tuple(odo, nf));
  }

  std::vector<TrialRec> recs(combos.size());
  std::uint64_t checks = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : checks) if (opts.parallel)
  for (long long ci = 0; ci < (long long)combos.size(); ++ci) {
    const Combo& combo = combos[ci];
    TrialRec& rec = recs[ci];
    int dims = combo.n + 1;

    // zero_k[j]: does slot k vanish at sequence value j/8
    std::array<std::array<char, vals>, 3> zero{};
    for (int k = 0; k < dims; ++k)
      for (int j = 0; j < vals; ++j) {
        Value arg = k == 0 ? Value::of(j, den) : Value::of(den - j, den);
        zero[k][j] = fam[combo.conn[k]].eval(arg).is_zero() ? 1 : 0;
      }

    int total = 1;
    for (int d = 0; d < dims; ++d) total *= vals;
    std::vector<char> cond(total);
    std::vector<std::array<int, 3>> sat;
    for (int idx = 0; idx < total; ++idx) {
      std::array<int, 3> t{0, 0, 0};
      int rest = idx;
      bool c = false;
      for (int d = 0; d < dims; ++d) {
        t[d] = rest % vals;
        rest /= vals;
        c = c || zero[d][t[d]];
      }
      cond[idx] = c ? 1 : 0;
      if (c) sat.push_back(t);
    }

    auto flat = [&](const std::array<int, 3>& t) {
      int idx = 0;
      for (int d = dims - 1; d >= 0; --d) idx = idx * vals + t[d];
      return idx;
    };
    auto fail = [&](const char* kernel, const std::array<int, 3>& t) {
      if (rec.ok) {
        rec.ok = false;
        std::string names;
        for (int k = 0; k < dims; ++k) names += (k ? ", " : "") + render_connective(fam[combo.conn[k]]);
        rec.note = std::string("kernel size ") + kernel + ", connectives [" + names + "], limsups (" +
                   std::to_string(t[0]) + "/8, " + std::to_string(t[1]) + "/8, " + std::to_string(t[2]) + "/8)";
      }
    };

    if ((int)sat.size() == total) {
      // every profile satisfies the condition, so any max does as well
      ++checks;
      continue;
    }

    std::uint64_t local = 0;
    for (const auto& a : sat) {
      ++local;
      if (!cond[flat(a)]) fail("1", a);
    }
    for (const auto& a : sat)
      for (const auto& b : sat) {
        std::array<int, 3> t{std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
        ++local;
        if (!cond[flat(t)]) fail("2", t);
      }
    for (const auto& a : sat)
      for (const auto& b : sat) {
        std::array<int, 3> ab{std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
        for (const auto& c : sat) {
          std::array<int, 3> t{std::max(ab[0], c[0]), std::max(ab[1], c[1]), std::max(ab[2], c[2])};
          ++local;
          if (!cond[flat(t)]) fail("3", t);
        }
      }
    checks += local;
  }

  json extra;
  json names = json::array();
  for (const auto& c : fam) names.push_back(render_connective(c));
  extra["connective_family"] = std::move(names);
  extra["combos"] = combos.size();
  return finalize("basic-lemma", opts, recs, checks, std::move(extra));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "limsup-identity",  "los",                 "leibniz-oracle",        "conditional-preservation", "basic-lemma",
      "downup-roundtrip", "product-commutation", "morphism-monotonicity", "example-reproduction"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "example-reproduction") return suite_example_reproduction(opts);
  if (name == "conditional-preservation") return suite_conditional_preservation(opts);
  if (name == "limsup-identity") return suite_limsup_identity(opts);
  if (name == "los") return suite_los(opts);
  if (name == "leibniz-oracle") return suite_leibniz_oracle(opts);
  if (name == "downup-roundtrip") return suite_downup_roundtrip(opts);
  if (name == "product-commutation") return suite_product_commutation(opts);
  if (name == "morphism-monotonicity") return suite_morphism_monotonicity(opts);
  if (name == "basic-lemma") return suite_basic_lemma(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace cmt

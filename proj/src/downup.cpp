#include "cmt/downup.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "cmt/errors.hpp"

namespace cmt {

Grid::Grid(int k_) : k(k_) {
  if (k < 1 || k > 20) throw structure_error("grid exponent must be between 1 and 20");
}

Value Grid::point(long long j) const {
  if (j < 0 || j >= den()) throw internal_error("grid point index out of range");
  return Value::of(j, den());
}

bool Grid::admits(Value v) const { return den() % v.den() == 0; }

std::string threshold_name(const std::string& base, long long j, long long den) {
  return base + "_le_" + std::to_string(j) + "_" + std::to_string(den);
}

namespace {

bool parse_number(std::string_view s, long long& out) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::optional<ThresholdName> parse_threshold_name(const std::string& name) {
  ThresholdName t;
  size_t last = name.rfind('_');
  if (last == std::string::npos || last == 0) return std::nullopt;
  size_t mid = name.rfind('_', last - 1);
  if (mid == std::string::npos) return std::nullopt;
  if (!parse_number(std::string_view(name).substr(mid + 1, last - mid - 1), t.j)) return std::nullopt;
  if (!parse_number(std::string_view(name).substr(last + 1), t.den)) return std::nullopt;
  if (mid < 3 || name.compare(mid - 3, 3, "_le") != 0) return std::nullopt;
  t.base = name.substr(0, mid - 3);
  if (t.base.empty()) return std::nullopt;
  return t;
}

ThresholdInfo threshold_info(const Vocabulary& fo_vocab) {
  struct BaseInfo {
    int arity = 0;
    std::map<long long, int> by_j;
  };
  std::vector<std::string> order;
  std::map<std::string, BaseInfo> bases;
  long long den = 0;
  for (size_t p = 0; p < fo_vocab.predicates().size(); ++p) {
    const auto& pr = fo_vocab.predicates()[p];
    auto parsed = parse_threshold_name(pr.name);
    if (!parsed) throw vocab_error("predicate " + pr.name + " is not a threshold symbol");
    const std::string& base = parsed->base;
    long long j = parsed->j, d = parsed->den;
    if (den == 0) den = d;
    if (d != den)
      throw vocab_error("mixed threshold denominators: " + std::to_string(den) + " and " + std::to_string(d));
    if (j >= d) throw vocab_error("threshold index out of range in " + pr.name);
    auto [it, fresh] = bases.try_emplace(base);
    if (fresh) {
      order.push_back(base);
      it->second.arity = pr.arity;
    } else if (it->second.arity != pr.arity) {
      throw vocab_error("threshold family " + base + " mixes arities");
    }
    if (!it->second.by_j.emplace(j, (int)p).second)
      throw vocab_error("duplicate threshold symbol " + pr.name);
  }
  int k = 0;
  if (den != 0) {
    while ((1ll << k) < den) ++k;
    if ((1ll << k) != den || k < 1)
      throw vocab_error("threshold denominator " + std::to_string(den) + " is not a power of two");
  }

  ThresholdInfo info;
  info.k = k;
  auto orig = std::make_shared<Vocabulary>();
  for (const std::string& base : order) {
    const BaseInfo& bi = bases.at(base);
    if ((long long)bi.by_j.size() != den || bi.by_j.begin()->first != 0)
      throw vocab_error("threshold family " + base + " is incomplete");
    orig->add_predicate(base, bi.arity);
    std::vector<int> row;
    row.reserve(bi.by_j.size());
    for (const auto& [j, idx] : bi.by_j) row.push_back(idx);
    info.fo_pred.push_back(std::move(row));
  }
  for (const auto& f : fo_vocab.functions()) orig->add_function(f.name, f.arity);
  for (const auto& c : fo_vocab.constants()) orig->add_constant(c.name);
  info.original = std::move(orig);
  return info;
}

VocabPtr vocab_down(const Vocabulary& v, Grid g) {
  auto out = std::make_shared<Vocabulary>();
  for (const auto& p : v.predicates())
    for (long long j = 0; j < g.den(); ++j) out->add_predicate(threshold_name(p.name, j, g.den()), p.arity);
  for (const auto& f : v.functions()) out->add_function(f.name, f.arity);
  for (const auto& c : v.constants()) out->add_constant(c.name);
  return out;
}

namespace {

std::string render_site(const std::string& name, const std::vector<int>& args) {
  if (args.empty()) return name;
  std::string s = name + "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(args[i]);
  }
  return s + ")";
}

}  // namespace

FOStructure structure_down(const GeneralStructure& m, Grid g, std::vector<std::string>* warnings) {
  if (!is_reduced(m)) throw structure_error("structure is not reduced; reduce it before translating down");
  FOStructure out(vocab_down(m.vocab(), g), m.universe());
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) out.fun_table((int)f) = m.fun_table((int)f);
  for (size_t c = 0; c < m.vocab().constants().size(); ++c) out.set_constant((int)c, m.constant((int)c));
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    const auto& pr = m.vocab().predicates()[p];
    const std::vector<Value>& table = m.pred_table((int)p);
    std::vector<int> fo_idx(g.den());
    for (long long j = 0; j < g.den(); ++j) fo_idx[j] = out.vocab().predicate_index(threshold_name(pr.name, j, g.den()));
    bool warned = false;
    for (size_t idx = 0; idx < table.size(); ++idx) {
      Value v = table[idx];
      if (warnings && !warned && !g.admits(v)) {
        std::vector<int> args;
        unflatten(idx, m.universe(), pr.arity, args);
        warnings->push_back(render_site(pr.name, args) + " = " + v.str() + " is off the 1/" +
                            std::to_string(g.den()) + " grid");
        warned = true;
      }
      for (long long j = 0; j < g.den(); ++j) out.pred_table(fo_idx[j])[idx] = v <= g.point(j) ? 1 : 0;
    }
  }
  return out;
}

bool is_increasing(const FOStructure& k, std::string* violation) {
  ThresholdInfo info = threshold_info(k.vocab());
  for (size_t p = 0; p < info.fo_pred.size(); ++p) {
    const std::vector<int>& row = info.fo_pred[p];
    int arity = info.original->predicates()[p].arity;
    size_t n = table_size(k.universe(), arity);
    for (size_t idx = 0; idx < n; ++idx) {
      for (size_t j = 0; j + 1 < row.size(); ++j) {
        if (k.pred_table(row[j])[idx] && !k.pred_table(row[j + 1])[idx]) {
          if (violation) {
            std::vector<int> args;
            unflatten(idx, k.universe(), arity, args);
            *violation = render_site(k.vocab().predicates()[row[j]].name, args) + " holds but " +
                         k.vocab().predicates()[row[j + 1]].name + " does not";
          }
          return false;
        }
      }
    }
  }
  return true;
}

GeneralStructure structure_up_raw(const FOStructure& k, Grid g) {
  ThresholdInfo info = threshold_info(k.vocab());
  if (info.k != g.k)
    throw vocab_error("threshold vocabulary is on a 1/" + std::to_string(1ll << info.k) + " grid, not 1/" +
                      std::to_string(g.den()));
  std::string violation;
  if (!is_increasing(k, &violation)) throw structure_error("structure is not increasing: " + violation);

  GeneralStructure out(info.original, k.universe());
  for (size_t f = 0; f < info.original->functions().size(); ++f) out.fun_table((int)f) = k.fun_table((int)f);
  for (size_t c = 0; c < info.original->constants().size(); ++c) out.set_constant((int)c, k.constant((int)c));
  for (size_t p = 0; p < info.fo_pred.size(); ++p) {
    const std::vector<int>& row = info.fo_pred[p];
    std::vector<Value>& table = out.pred_table((int)p);
    for (size_t idx = 0; idx < table.size(); ++idx) {
      Value v = Value::one();
      for (size_t j = 0; j < row.size(); ++j) {
        if (k.pred_table(row[j])[idx]) {
          v = g.point((long long)j);
          break;
        }
      }
      table[idx] = v;
    }
  }
  return out;
}

GeneralStructure structure_up(const FOStructure& k, Grid g) { return reduce_structure(structure_up_raw(k, g)).first; }

}  // namespace cmt

#include "cmt/structure.hpp"

#include "cmt/errors.hpp"

namespace cmt {

bool next_tuple(std::vector<int>& t, int n) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

size_t table_size(int universe, int arity) {
  size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= universe;
  return s;
}

size_t flat_index(const std::vector<int>& args, int universe) {
  size_t idx = 0;
  for (size_t i = args.size(); i-- > 0;) idx = idx * universe + args[i];
  return idx;
}

void unflatten(size_t idx, int universe, int arity, std::vector<int>& out) {
  out.resize(arity);
  for (int i = 0; i < arity; ++i) {
    out[i] = idx % universe;
    idx /= universe;
  }
}

GeneralStructure::GeneralStructure(VocabPtr vocab, int universe_size)
    : vocab_(std::move(vocab)), universe_(universe_size) {
  if (universe_ < 1) throw vocab_error("universe must be nonempty");
  for (const auto& p : vocab_->predicates()) pred_tables_.emplace_back(table_size(universe_, p.arity), Value::zero());
  for (const auto& f : vocab_->functions()) fun_tables_.emplace_back(table_size(universe_, f.arity), 0);
  constants_.assign(vocab_->constants().size(), 0);
}

void GeneralStructure::check_elem(int e) const {
  if (e < 0 || e >= universe_) throw eval_error("element out of range: " + std::to_string(e));
}

Value GeneralStructure::pred(int p, const std::vector<int>& args) const {
  return pred_tables_[p][flat_index(args, universe_)];
}

void GeneralStructure::set_pred(int p, const std::vector<int>& args, Value v) {
  for (int a : args) check_elem(a);
  if ((int)args.size() != vocab_->predicates()[p].arity) throw eval_error("bad argument count for " + vocab_->predicates()[p].name);
  pred_tables_[p][flat_index(args, universe_)] = v;
}

int GeneralStructure::fun(int f, const std::vector<int>& args) const {
  return fun_tables_[f][flat_index(args, universe_)];
}

void GeneralStructure::set_fun(int f, const std::vector<int>& args, int elem) {
  for (int a : args) check_elem(a);
  check_elem(elem);
  if ((int)args.size() != vocab_->functions()[f].arity) throw eval_error("bad argument count for " + vocab_->functions()[f].name);
  fun_tables_[f][flat_index(args, universe_)] = elem;
}

int GeneralStructure::constant(int c) const { return constants_[c]; }

void GeneralStructure::set_constant(int c, int elem) {
  check_elem(elem);
  constants_[c] = elem;
}

FOStructure::FOStructure(VocabPtr vocab, int universe_size)
    : vocab_(std::move(vocab)), universe_(universe_size) {
  if (universe_ < 1) throw vocab_error("universe must be nonempty");
  for (const auto& p : vocab_->predicates()) pred_tables_.emplace_back(table_size(universe_, p.arity), 0);
  for (const auto& f : vocab_->functions()) fun_tables_.emplace_back(table_size(universe_, f.arity), 0);
  constants_.assign(vocab_->constants().size(), 0);
}

void FOStructure::check_elem(int e) const {
  if (e < 0 || e >= universe_) throw eval_error("element out of range: " + std::to_string(e));
}

bool FOStructure::pred(int p, const std::vector<int>& args) const {
  return pred_tables_[p][flat_index(args, universe_)] != 0;
}

void FOStructure::set_pred(int p, const std::vector<int>& args, bool holds) {
  for (int a : args) check_elem(a);
  if ((int)args.size() != vocab_->predicates()[p].arity) throw eval_error("bad argument count for " + vocab_->predicates()[p].name);
  pred_tables_[p][flat_index(args, universe_)] = holds ? 1 : 0;
}

int FOStructure::fun(int f, const std::vector<int>& args) const {
  return fun_tables_[f][flat_index(args, universe_)];
}

void FOStructure::set_fun(int f, const std::vector<int>& args, int elem) {
  for (int a : args) check_elem(a);
  check_elem(elem);
  if ((int)args.size() != vocab_->functions()[f].arity) throw eval_error("bad argument count for " + vocab_->functions()[f].name);
  fun_tables_[f][flat_index(args, universe_)] = elem;
}

int FOStructure::constant(int c) const { return constants_[c]; }

void FOStructure::set_constant(int c, int elem) {
  check_elem(elem);
  constants_[c] = elem;
}

GeneralStructure fo_to_general(const FOStructure& k) {
  GeneralStructure m(k.vocab_ptr(), k.universe());
  for (size_t p = 0; p < k.vocab().predicates().size(); ++p) {
    auto& tab = m.pred_table((int)p);
    const auto& src = k.pred_table((int)p);
    for (size_t i = 0; i < src.size(); ++i) tab[i] = src[i] ? Value::zero() : Value::one();
  }
  for (size_t f = 0; f < k.vocab().functions().size(); ++f) m.fun_table((int)f) = k.fun_table((int)f);
  for (size_t c = 0; c < k.vocab().constants().size(); ++c) m.set_constant((int)c, k.constant((int)c));
  return m;
}

GeneralStructure vocabulary_part(const GeneralStructure& m, VocabPtr v0) {
  if (!v0->subvocabulary_of(m.vocab())) throw vocab_error("not a subvocabulary");
  GeneralStructure out(v0, m.universe());
  for (size_t p = 0; p < v0->predicates().size(); ++p) {
    int src = m.vocab().predicate_index(v0->predicates()[p].name);
    out.pred_table((int)p) = m.pred_table(src);
  }
  for (size_t f = 0; f < v0->functions().size(); ++f) {
    int src = m.vocab().function_index(v0->functions()[f].name);
    out.fun_table((int)f) = m.fun_table(src);
  }
  for (size_t c = 0; c < v0->constants().size(); ++c) {
    int src = m.vocab().constant_index(v0->constants()[c].name);
    out.set_constant((int)c, m.constant(src));
  }
  return out;
}

}  // namespace cmt

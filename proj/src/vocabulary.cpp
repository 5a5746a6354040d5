#include "cmt/vocabulary.hpp"

#include "cmt/errors.hpp"

namespace cmt {

void Vocabulary::claim_name(const std::string& name) {
  if (name.empty()) throw vocab_error("empty symbol name");
  if (index_.count(name)) throw vocab_error("duplicate symbol name: " + name);
}

void Vocabulary::add_predicate(const std::string& name, int arity) {
  if (arity < 0) throw vocab_error("negative predicate arity: " + name);
  claim_name(name);
  index_[name] = {SymbolKind::predicate, (int)predicates_.size()};
  predicates_.push_back({name, arity});
}

void Vocabulary::add_function(const std::string& name, int arity) {
  if (arity < 1) throw vocab_error("function arity must be at least 1: " + name);
  claim_name(name);
  index_[name] = {SymbolKind::function, (int)functions_.size()};
  functions_.push_back({name, arity});
}

void Vocabulary::add_constant(const std::string& name) {
  claim_name(name);
  index_[name] = {SymbolKind::constant, (int)constants_.size()};
  constants_.push_back({name});
}

int Vocabulary::predicate_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end() || it->second.first != SymbolKind::predicate) return -1;
  return it->second.second;
}

int Vocabulary::function_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end() || it->second.first != SymbolKind::function) return -1;
  return it->second.second;
}

int Vocabulary::constant_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end() || it->second.first != SymbolKind::constant) return -1;
  return it->second.second;
}

bool Vocabulary::subvocabulary_of(const Vocabulary& v) const {
  for (const auto& p : predicates_) {
    int i = v.predicate_index(p.name);
    if (i < 0 || v.predicates()[i].arity != p.arity) return false;
  }
  for (const auto& f : functions_) {
    int i = v.function_index(f.name);
    if (i < 0 || v.functions()[i].arity != f.arity) return false;
  }
  for (const auto& c : constants_) {
    if (v.constant_index(c.name) < 0) return false;
  }
  return true;
}

bool Vocabulary::operator==(const Vocabulary& o) const {
  auto same_p = [](const Predicate& a, const Predicate& b) { return a.name == b.name && a.arity == b.arity; };
  auto same_f = [](const Function& a, const Function& b) { return a.name == b.name && a.arity == b.arity; };
  if (predicates_.size() != o.predicates_.size() || functions_.size() != o.functions_.size() ||
      constants_.size() != o.constants_.size())
    return false;
  for (size_t i = 0; i < predicates_.size(); ++i)
    if (!same_p(predicates_[i], o.predicates_[i])) return false;
  for (size_t i = 0; i < functions_.size(); ++i)
    if (!same_f(functions_[i], o.functions_[i])) return false;
  for (size_t i = 0; i < constants_.size(); ++i)
    if (constants_[i].name != o.constants_[i].name) return false;
  return true;
}

}  // namespace cmt

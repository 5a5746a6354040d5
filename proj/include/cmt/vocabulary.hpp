#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmt {

enum class SymbolKind { predicate, function, constant };

// Finite signature: predicate symbols with arity >= 0, function symbols with
// arity >= 1, constant symbols.  Names are unique across all three kinds.
class Vocabulary {
 public:
  struct Predicate {
    std::string name;
    int arity;
  };
  struct Function {
    std::string name;
    int arity;
  };
  struct Constant {
    std::string name;
  };

  void add_predicate(const std::string& name, int arity);
  void add_function(const std::string& name, int arity);
  void add_constant(const std::string& name);

  const std::vector<Predicate>& predicates() const { return predicates_; }
  const std::vector<Function>& functions() const { return functions_; }
  const std::vector<Constant>& constants() const { return constants_; }

  // -1 when absent
  int predicate_index(const std::string& name) const;
  int function_index(const std::string& name) const;
  int constant_index(const std::string& name) const;
  bool has_symbol(const std::string& name) const { return index_.count(name) > 0; }

  // every symbol of *this occurs in v with the same kind and arity
  bool subvocabulary_of(const Vocabulary& v) const;

  bool operator==(const Vocabulary& o) const;

 private:
  void claim_name(const std::string& name);

  std::vector<Predicate> predicates_;
  std::vector<Function> functions_;
  std::vector<Constant> constants_;
  std::unordered_map<std::string, std::pair<SymbolKind, int>> index_;
};

using VocabPtr = std::shared_ptr<const Vocabulary>;

}  // namespace cmt

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmt/value.hpp"
#include "cmt/vocabulary.hpp"

namespace cmt {

// variable name -> element
using Assignment = std::map<std::string, int>;

// odometer step over tuples in {0..n-1}^k; returns false after the last tuple
bool next_tuple(std::vector<int>& t, int n);

size_t table_size(int universe, int arity);
size_t flat_index(const std::vector<int>& args, int universe);
void unflatten(size_t idx, int universe, int arity, std::vector<int>& out);

// Finite structure with [0,1]-valued predicates and total functions.  No
// metric, no built-in equality.  Universe elements are 0..n-1.  Tables are
// stored flat; argument 0 varies fastest.
class GeneralStructure {
 public:
  GeneralStructure(VocabPtr vocab, int universe_size);

  const Vocabulary& vocab() const { return *vocab_; }
  const VocabPtr& vocab_ptr() const { return vocab_; }
  int universe() const { return universe_; }

  Value pred(int p, const std::vector<int>& args) const;
  void set_pred(int p, const std::vector<int>& args, Value v);
  int fun(int f, const std::vector<int>& args) const;
  void set_fun(int f, const std::vector<int>& args, int elem);
  int constant(int c) const;
  void set_constant(int c, int elem);

  const std::vector<Value>& pred_table(int p) const { return pred_tables_[p]; }
  std::vector<Value>& pred_table(int p) { return pred_tables_[p]; }
  const std::vector<int>& fun_table(int f) const { return fun_tables_[f]; }
  std::vector<int>& fun_table(int f) { return fun_tables_[f]; }

 private:
  void check_elem(int e) const;

  VocabPtr vocab_;
  int universe_;
  std::vector<std::vector<Value>> pred_tables_;
  std::vector<std::vector<int>> fun_tables_;
  std::vector<int> constants_;
};

// Classical two-valued structure over the same kind of signature, with the
// usual built-in equality.
class FOStructure {
 public:
  FOStructure(VocabPtr vocab, int universe_size);

  const Vocabulary& vocab() const { return *vocab_; }
  const VocabPtr& vocab_ptr() const { return vocab_; }
  int universe() const { return universe_; }

  bool pred(int p, const std::vector<int>& args) const;
  void set_pred(int p, const std::vector<int>& args, bool holds);
  int fun(int f, const std::vector<int>& args) const;
  void set_fun(int f, const std::vector<int>& args, int elem);
  int constant(int c) const;
  void set_constant(int c, int elem);

  const std::vector<unsigned char>& pred_table(int p) const { return pred_tables_[p]; }
  std::vector<unsigned char>& pred_table(int p) { return pred_tables_[p]; }
  const std::vector<int>& fun_table(int f) const { return fun_tables_[f]; }
  std::vector<int>& fun_table(int f) { return fun_tables_[f]; }

 private:
  void check_elem(int e) const;

  VocabPtr vocab_;
  int universe_;
  std::vector<std::vector<unsigned char>> pred_tables_;
  std::vector<std::vector<int>> fun_tables_;
  std::vector<int> constants_;
};

// encode a classical structure with truth value 0 for "holds", 1 otherwise
GeneralStructure fo_to_general(const FOStructure& k);

// restrict m to a subvocabulary (every v0 symbol must occur in m's vocabulary
// with the same kind and arity)
GeneralStructure vocabulary_part(const GeneralStructure& m, VocabPtr v0);

}  // namespace cmt

#include "cmt/leibniz.hpp"

#include <algorithm>
#include <map>

#include "cmt/errors.hpp"

namespace cmt {

namespace {

// Greatest fixpoint by refinement.  Start from agreement on all predicate
// entries that differ in a single slot, then refine by requiring function
// images (again in a single slot, other arguments arbitrary) to stay related.
// Single-slot swaps suffice: an atomic formula with several occurrences of
// the distinguished variable is handled by swapping one occurrence at a time
// and chaining, and nested terms follow by induction on depth through the
// function condition.
std::vector<int> initial_blocks(const GeneralStructure& m) {
  int n = m.universe();
  std::vector<std::vector<Value>> keys(n);
  std::vector<int> context;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int r = m.vocab().predicates()[p].arity;
    if (r == 0) continue;
    context.assign(r - 1, 0);
    std::vector<int> args(r);
    do {
      for (int slot = 0; slot < r; ++slot) {
        for (int a = 0; a < n; ++a) {
          for (int j = 0, k = 0; j < r; ++j) args[j] = j == slot ? a : context[k++];
          keys[a].push_back(m.pred((int)p, args));
        }
      }
    } while (next_tuple(context, n));
  }
  std::map<std::vector<Value>, int> ids;
  std::vector<int> block(n);
  for (int a = 0; a < n; ++a) block[a] = ids.emplace(keys[a], (int)ids.size()).first->second;
  return block;
}

std::vector<int> refine_by_functions(const GeneralStructure& m, const std::vector<int>& block) {
  int n = m.universe();
  std::vector<std::pair<int, std::vector<int>>> keys(n);
  for (int a = 0; a < n; ++a) keys[a].first = block[a];
  std::vector<int> context;
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int r = m.vocab().functions()[f].arity;
    context.assign(r - 1, 0);
    std::vector<int> args(r);
    do {
      for (int slot = 0; slot < r; ++slot) {
        for (int a = 0; a < n; ++a) {
          for (int j = 0, k = 0; j < r; ++j) args[j] = j == slot ? a : context[k++];
          keys[a].second.push_back(block[m.fun((int)f, args)]);
        }
      }
    } while (next_tuple(context, n));
  }
  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::vector<int> out(n);
  for (int a = 0; a < n; ++a) out[a] = ids.emplace(keys[a], (int)ids.size()).first->second;
  return out;
}

int block_count(const std::vector<int>& block) {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

}  // namespace

QuotientMap leibniz_partition(const GeneralStructure& m) {
  int n = m.universe();
  std::vector<int> block = initial_blocks(m);
  if (!m.vocab().functions().empty()) {
    int count = block_count(block);
    for (;;) {
      std::vector<int> next = refine_by_functions(m, block);
      int next_count = block_count(next);
      if (next_count == count) break;
      block.swap(next);
      count = next_count;
    }
  }
  // renumber blocks by least member for a canonical map
  QuotientMap q;
  q.block_of.assign(n, -1);
  std::vector<int> rename(block_count(block), -1);
  for (int a = 0; a < n; ++a) {
    if (rename[block[a]] < 0) {
      rename[block[a]] = (int)q.blocks.size();
      q.blocks.emplace_back();
    }
    q.block_of[a] = rename[block[a]];
    q.blocks[q.block_of[a]].push_back(a);
  }
  return q;
}

std::pair<GeneralStructure, QuotientMap> reduce_structure(const GeneralStructure& m) {
  QuotientMap q = leibniz_partition(m);
  int nb = (int)q.blocks.size();
  GeneralStructure out(m.vocab_ptr(), nb);

  std::vector<int> tup, rep;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int r = m.vocab().predicates()[p].arity;
    tup.assign(r, 0);
    rep.resize(r);
    do {
      for (int j = 0; j < r; ++j) rep[j] = q.representative(tup[j]);
      out.set_pred((int)p, tup, m.pred((int)p, rep));
    } while (next_tuple(tup, nb));
  }
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int r = m.vocab().functions()[f].arity;
    tup.assign(r, 0);
    rep.resize(r);
    do {
      for (int j = 0; j < r; ++j) rep[j] = q.representative(tup[j]);
      out.set_fun((int)f, tup, q.block_of[m.fun((int)f, rep)]);
    } while (next_tuple(tup, nb));
  }
  for (size_t c = 0; c < m.vocab().constants().size(); ++c) out.set_constant((int)c, q.block_of[m.constant((int)c)]);

  // every original entry must agree with its class representative entry
  int n = m.universe();
  std::vector<int> blk;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int r = m.vocab().predicates()[p].arity;
    tup.assign(r, 0);
    blk.resize(r);
    do {
      for (int j = 0; j < r; ++j) blk[j] = q.block_of[tup[j]];
      if (!(m.pred((int)p, tup) == out.pred((int)p, blk)))
        throw internal_error("quotient predicate table disagrees within a class");
    } while (next_tuple(tup, n));
  }
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int r = m.vocab().functions()[f].arity;
    tup.assign(r, 0);
    blk.resize(r);
    do {
      for (int j = 0; j < r; ++j) blk[j] = q.block_of[tup[j]];
      if (q.block_of[m.fun((int)f, tup)] != out.fun((int)f, blk))
        throw internal_error("quotient function table disagrees within a class");
    } while (next_tuple(tup, n));
  }
  return {std::move(out), std::move(q)};
}

bool is_reduced(const GeneralStructure& m) { return leibniz_partition(m).discrete(); }

}  // namespace cmt

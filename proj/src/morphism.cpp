#include "cmt/morphism.hpp"

#include <algorithm>
#include <set>

#include "cmt/errors.hpp"
#include "cmt/leibniz.hpp"

namespace cmt {

namespace {

std::string tuple_str(const std::string& sym, const std::vector<int>& args) {
  std::string s = sym + "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(args[i]);
  }
  return s + ")";
}

}  // namespace

MorphismReport check_morphism(const GeneralStructure& m, const GeneralStructure& n, const std::vector<int>& h,
                              MorphismKind kind) {
  if (!(m.vocab() == n.vocab())) throw vocab_error("morphism endpoints have different vocabularies");
  if ((int)h.size() != m.universe()) return {false, "map does not cover the domain universe"};
  for (int e : h)
    if (e < 0 || e >= n.universe()) return {false, "map leaves the codomain universe"};

  if (kind == MorphismKind::homomorphism) {
    std::vector<char> hit(n.universe(), 0);
    for (int e : h) hit[e] = 1;
    for (int b = 0; b < n.universe(); ++b)
      if (!hit[b]) return {false, "not onto: element " + std::to_string(b) + " has no preimage"};
  }

  for (size_t c = 0; c < m.vocab().constants().size(); ++c) {
    if (h[m.constant((int)c)] != n.constant((int)c))
      return {false, "constant " + m.vocab().constants()[c].name + " not preserved"};
  }

  std::vector<int> tup, img;
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int r = m.vocab().functions()[f].arity;
    tup.assign(r, 0);
    img.resize(r);
    do {
      for (int j = 0; j < r; ++j) img[j] = h[tup[j]];
      if (h[m.fun((int)f, tup)] != n.fun((int)f, img))
        return {false, tuple_str(m.vocab().functions()[f].name, tup) + " does not commute with the map"};
    } while (next_tuple(tup, m.universe()));
  }

  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int r = m.vocab().predicates()[p].arity;
    tup.assign(r, 0);
    img.resize(r);
    do {
      for (int j = 0; j < r; ++j) img[j] = h[tup[j]];
      Value vm = m.pred((int)p, tup);
      Value vn = n.pred((int)p, img);
      bool good = kind == MorphismKind::embedding ? vm == vn : vn <= vm;
      if (!good)
        return {false, tuple_str(m.vocab().predicates()[p].name, tup) + ": " + vm.str() +
                           (kind == MorphismKind::embedding ? " != " : " < ") + vn.str()};
    } while (next_tuple(tup, m.universe()));
  }
  return {true, ""};
}

namespace {

// multiset of predicate values over all entries mentioning the element
std::multiset<Value> value_signature(const GeneralStructure& m, int a) {
  std::multiset<Value> sig;
  std::vector<int> tup;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int r = m.vocab().predicates()[p].arity;
    if (r == 0) continue;
    tup.assign(r, 0);
    do {
      if (std::find(tup.begin(), tup.end(), a) != tup.end()) sig.insert(m.pred((int)p, tup));
    } while (next_tuple(tup, m.universe()));
  }
  return sig;
}

bool consistent_prefix(const GeneralStructure& m, const GeneralStructure& n, const std::vector<int>& h, int bound) {
  // check every constraint whose participants are all assigned (< bound)
  std::vector<int> tup, img;
  auto assigned = [&](const std::vector<int>& t) {
    for (int e : t)
      if (e >= bound) return false;
    return true;
  };
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    int r = m.vocab().predicates()[p].arity;
    tup.assign(r, 0);
    img.resize(r);
    do {
      if (!assigned(tup)) continue;
      bool touches = r == 0 || std::find(tup.begin(), tup.end(), bound - 1) != tup.end();
      if (!touches) continue;
      for (int j = 0; j < r; ++j) img[j] = h[tup[j]];
      if (!(m.pred((int)p, tup) == n.pred((int)p, img))) return false;
    } while (next_tuple(tup, m.universe()));
  }
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    int r = m.vocab().functions()[f].arity;
    tup.assign(r, 0);
    img.resize(r);
    do {
      if (!assigned(tup)) continue;
      int out = m.fun((int)f, tup);
      if (out >= bound) continue;
      for (int j = 0; j < r; ++j) img[j] = h[tup[j]];
      if (h[out] != n.fun((int)f, img)) return false;
    } while (next_tuple(tup, m.universe()));
  }
  return true;
}

bool extend(const GeneralStructure& m, const GeneralStructure& n, const std::vector<std::vector<char>>& allowed,
            std::vector<int>& h, std::vector<char>& used, int next) {
  int k = m.universe();
  if (next == k) return true;
  for (int b = 0; b < n.universe(); ++b) {
    if (used[b] || !allowed[next][b]) continue;
    h[next] = b;
    used[b] = 1;
    if (consistent_prefix(m, n, h, next + 1) && extend(m, n, allowed, h, used, next + 1)) return true;
    used[b] = 0;
  }
  h[next] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const GeneralStructure& m, const GeneralStructure& n) {
  if (!(m.vocab() == n.vocab())) throw vocab_error("isomorphism endpoints have different vocabularies");
  GeneralStructure rm = reduce_structure(m).first;
  GeneralStructure rn = reduce_structure(n).first;
  if (rm.universe() != rn.universe()) return std::nullopt;
  int k = rm.universe();

  // 0-ary predicates have no element to pin; compare them up front
  std::vector<int> empty;
  for (size_t p = 0; p < rm.vocab().predicates().size(); ++p) {
    if (rm.vocab().predicates()[p].arity != 0) continue;
    if (!(rm.pred((int)p, empty) == rn.pred((int)p, empty))) return std::nullopt;
  }

  std::vector<std::vector<char>> allowed(k, std::vector<char>(k, 0));
  {
    std::vector<std::multiset<Value>> sm(k), sn(k);
    for (int a = 0; a < k; ++a) sm[a] = value_signature(rm, a);
    for (int b = 0; b < k; ++b) sn[b] = value_signature(rn, b);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) allowed[a][b] = sm[a] == sn[b];
  }
  // constants force their images
  for (size_t c = 0; c < rm.vocab().constants().size(); ++c) {
    int a = rm.constant((int)c);
    int b = rn.constant((int)c);
    if (!allowed[a][b]) return std::nullopt;
    for (int x = 0; x < k; ++x) allowed[a][x] = x == b;
  }

  std::vector<int> h(k, -1);
  std::vector<char> used(k, 0);
  if (!extend(rm, rn, allowed, h, used, 0)) return std::nullopt;
  return h;
}

}  // namespace cmt

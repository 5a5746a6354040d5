#include "cmt/classify.hpp"

#include "cmt/errors.hpp"

namespace cmt {

namespace {

const char* kind_name(ContFormula::Kind k) {
  switch (k) {
    case ContFormula::Kind::atomic: return "atomic";
    case ContFormula::Kind::constant: return "constant";
    case ContFormula::Kind::min: return "min";
    case ContFormula::Kind::max: return "max";
    case ContFormula::Kind::trunc_sub: return "trunc_sub";
    case ContFormula::Kind::trunc_add: return "trunc_add";
    case ContFormula::Kind::half: return "half";
    case ContFormula::Kind::apply: return "apply";
    case ContFormula::Kind::sup: return "sup";
    case ContFormula::Kind::inf: return "inf";
  }
  return "?";
}

const char* kind_name(FOFormula::Kind k) {
  switch (k) {
    case FOFormula::Kind::atomic: return "atomic";
    case FOFormula::Kind::equal: return "equal";
    case FOFormula::Kind::lnot: return "not";
    case FOFormula::Kind::land: return "and";
    case FOFormula::Kind::lor: return "or";
    case FOFormula::Kind::forall: return "forall";
    case FOFormula::Kind::exists: return "exists";
  }
  return "?";
}

using Path = std::vector<int>;

template <typename F>
std::string path_str(const Path& p, const F& node) {
  std::string s;
  if (p.empty()) s = "/";
  for (int i : p) s += "/" + std::to_string(i);
  return s + " (" + kind_name(node.kind) + ")";
}

const ContFormula& at_path(const ContFormula& f, const Path& p) {
  const ContFormula* cur = &f;
  for (int i : p) cur = &cur->children[i];
  return *cur;
}

const FOFormula& at_path(const FOFormula& f, const Path& p) {
  const FOFormula* cur = &f;
  for (int i : p) cur = &cur->children[i];
  return *cur;
}

// each checker returns the path of the first violation, or nullopt if fine

std::optional<Path> find_quantifier(const ContFormula& f, Path& p) {
  if (f.kind == ContFormula::Kind::sup || f.kind == ContFormula::Kind::inf) return p;
  for (size_t i = 0; i < f.children.size(); ++i) {
    p.push_back((int)i);
    if (auto w = find_quantifier(f.children[i], p)) return w;
    p.pop_back();
  }
  return std::nullopt;
}

std::optional<Path> find_unrestricted(const ContFormula& f, Path& p) {
  if (f.kind == ContFormula::Kind::apply) return p;
  for (size_t i = 0; i < f.children.size(); ++i) {
    p.push_back((int)i);
    if (auto w = find_unrestricted(f.children[i], p)) return w;
    p.pop_back();
  }
  return std::nullopt;
}

bool is_negated_atomic(const ContFormula& f) {
  return f.kind == ContFormula::Kind::trunc_sub && f.children[0].kind == ContFormula::Kind::constant &&
         f.children[0].value.is_one() && f.children[1].kind == ContFormula::Kind::atomic;
}

// peel nondecreasing unary wrappers down to an atomic, negated atomic, or
// constant; nullopt if some other shape intervenes
std::optional<PrimitivePart> match_part(const ContFormula& f) {
  PrimitivePart part;
  const ContFormula* cur = &f;
  auto push_outer = [&part](const MonotoneConnective& c) {
    part.outer = part.outer ? compose(*part.outer, c) : c;
  };
  for (;;) {
    using K = ContFormula::Kind;
    if (cur->kind == K::atomic) {
      part.leaf = *cur;
      return part;
    }
    if (is_negated_atomic(*cur)) {
      part.leaf = *cur;
      part.negated = true;
      return part;
    }
    if (cur->kind == K::constant) {
      part.leaf = *cur;
      part.constant = true;
      return part;
    }
    if (cur->kind == K::apply) {
      push_outer(*cur->conn);
      cur = &cur->children[0];
      continue;
    }
    if (cur->kind == K::half) {
      push_outer(MonotoneConnective::half_map());
      cur = &cur->children[0];
      continue;
    }
    if (cur->kind == K::trunc_sub && cur->children[1].kind == K::constant) {
      push_outer(MonotoneConnective::sub_const(cur->children[1].value));
      cur = &cur->children[0];
      continue;
    }
    if (cur->kind == K::trunc_add && cur->children[1].kind == K::constant) {
      push_outer(MonotoneConnective::add_const(cur->children[1].value));
      cur = &cur->children[0];
      continue;
    }
    if (cur->kind == K::trunc_add && cur->children[0].kind == K::constant) {
      push_outer(MonotoneConnective::add_const(cur->children[0].value));
      cur = &cur->children[1];
      continue;
    }
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::vector<PrimitivePart>> match_primitive_conditional(const ContFormula& f) {
  std::vector<const ContFormula*> conjuncts;
  if (f.kind == ContFormula::Kind::min)
    for (const auto& c : f.children) conjuncts.push_back(&c);
  else
    conjuncts.push_back(&f);

  std::vector<PrimitivePart> parts;
  int positives = 0;
  for (const ContFormula* c : conjuncts) {
    auto part = match_part(*c);
    if (!part) return std::nullopt;
    if (!part->negated && !part->constant) ++positives;
    parts.push_back(std::move(*part));
  }
  if (positives > 1) return std::nullopt;
  return parts;
}

namespace {

std::optional<Path> find_nonconditional(const ContFormula& f, Path& p) {
  using K = ContFormula::Kind;
  if (f.kind == K::max || f.kind == K::sup || f.kind == K::inf) {
    for (size_t i = 0; i < f.children.size(); ++i) {
      p.push_back((int)i);
      if (auto w = find_nonconditional(f.children[i], p)) return w;
      p.pop_back();
    }
    return std::nullopt;
  }
  if (match_primitive_conditional(f)) return std::nullopt;
  return p;
}

// existential: quantifier-free base, closed under nondecreasing connectives
// and inf; universal is the sup-closed mirror
std::optional<Path> find_nonexistential(const ContFormula& f, Path& p, bool universal) {
  using K = ContFormula::Kind;
  Path scratch = p;
  if (!find_quantifier(f, scratch)) return std::nullopt;  // quantifier-free
  switch (f.kind) {
    case K::min:
    case K::max:
    case K::trunc_add: {
      for (size_t i = 0; i < f.children.size(); ++i) {
        p.push_back((int)i);
        if (auto w = find_nonexistential(f.children[i], p, universal)) return w;
        p.pop_back();
      }
      return std::nullopt;
    }
    case K::half:
    case K::apply: {
      p.push_back(0);
      if (auto w = find_nonexistential(f.children[0], p, universal)) return w;
      p.pop_back();
      return std::nullopt;
    }
    case K::trunc_sub: {
      if (f.children[1].kind != K::constant) return p;  // only u -. const is nondecreasing
      p.push_back(0);
      if (auto w = find_nonexistential(f.children[0], p, universal)) return w;
      p.pop_back();
      return std::nullopt;
    }
    case K::inf:
    case K::sup: {
      bool allowed = universal ? f.kind == K::sup : f.kind == K::inf;
      if (!allowed) return p;
      p.push_back(0);
      if (auto w = find_nonexistential(f.children[0], p, universal)) return w;
      p.pop_back();
      return std::nullopt;
    }
    default:
      return p;
  }
}

// positive: atomics (and constants), nondecreasing connectives, sup and inf
std::optional<Path> find_nonpositive(const ContFormula& f, Path& p) {
  using K = ContFormula::Kind;
  switch (f.kind) {
    case K::atomic:
    case K::constant:
      return std::nullopt;
    case K::min:
    case K::max:
    case K::trunc_add: {
      for (size_t i = 0; i < f.children.size(); ++i) {
        p.push_back((int)i);
        if (auto w = find_nonpositive(f.children[i], p)) return w;
        p.pop_back();
      }
      return std::nullopt;
    }
    case K::half:
    case K::apply:
    case K::sup:
    case K::inf: {
      p.push_back(0);
      if (auto w = find_nonpositive(f.children[0], p)) return w;
      p.pop_back();
      return std::nullopt;
    }
    case K::trunc_sub: {
      if (f.children[1].kind != K::constant) return p;
      p.push_back(0);
      if (auto w = find_nonpositive(f.children[0], p)) return w;
      p.pop_back();
      return std::nullopt;
    }
  }
  return p;
}

}  // namespace

ContClassification classify_cont(const ContFormula& raw) {
  ContFormula f = normalize(raw);
  ContClassification r;
  Path p;

  p.clear();
  if (auto w = find_quantifier(f, p)) {
    r.witnesses["quantifier_free"] = path_str(*w, at_path(f, *w));
  } else {
    r.quantifier_free = true;
  }

  p.clear();
  if (auto w = find_unrestricted(f, p)) {
    r.witnesses["restricted"] = path_str(*w, at_path(f, *w));
  } else {
    r.restricted = true;
  }

  if (match_primitive_conditional(f)) {
    r.primitive_conditional = true;
  } else {
    Path w;  // first conjunct that fails to peel, or the second plain atomic slot
    if (f.kind == ContFormula::Kind::min) {
      int positives = 0;
      for (size_t i = 0; i < f.children.size(); ++i) {
        auto part = match_part(f.children[i]);
        if (!part || (!part->negated && !part->constant && ++positives > 1)) {
          w = {(int)i};
          break;
        }
      }
    }
    r.witnesses["primitive_conditional"] = path_str(w, at_path(f, w));
  }

  p.clear();
  if (auto w = find_nonconditional(f, p)) {
    r.witnesses["conditional"] = path_str(*w, at_path(f, *w));
  } else {
    r.conditional = true;
  }

  p.clear();
  if (auto w = find_nonexistential(f, p, false)) {
    r.witnesses["existential"] = path_str(*w, at_path(f, *w));
  } else {
    r.existential = true;
  }

  p.clear();
  if (auto w = find_nonexistential(f, p, true)) {
    r.witnesses["universal"] = path_str(*w, at_path(f, *w));
  } else {
    r.universal = true;
  }

  p.clear();
  if (auto w = find_nonpositive(f, p)) {
    r.witnesses["positive"] = path_str(*w, at_path(f, *w));
  } else {
    r.positive = true;
  }

  if (r.primitive_conditional && !r.conditional) throw internal_error("primitive conditional must be conditional");
  return r;
}

namespace {

// disjunction of negated atomics with at most one plain atomic
std::optional<Path> find_nonbasic_horn(const FOFormula& f, Path& p) {
  using K = FOFormula::Kind;
  std::vector<std::pair<const FOFormula*, Path>> disjuncts;
  if (f.kind == K::lor) {
    for (size_t i = 0; i < f.children.size(); ++i) {
      Path q = p;
      q.push_back((int)i);
      disjuncts.push_back({&f.children[i], q});
    }
  } else {
    disjuncts.push_back({&f, p});
  }
  int positives = 0;
  for (auto& [d, q] : disjuncts) {
    if (d->kind == K::atomic || d->kind == K::equal) {
      if (++positives > 1) return q;
      continue;
    }
    if (d->kind == K::lnot &&
        (d->children[0].kind == K::atomic || d->children[0].kind == K::equal))
      continue;
    return q;
  }
  return std::nullopt;
}

std::optional<Path> find_nonhorn(const FOFormula& f, Path& p) {
  using K = FOFormula::Kind;
  if (f.kind == K::land || f.kind == K::forall || f.kind == K::exists) {
    for (size_t i = 0; i < f.children.size(); ++i) {
      p.push_back((int)i);
      if (auto w = find_nonhorn(f.children[i], p)) return w;
      p.pop_back();
    }
    return std::nullopt;
  }
  return find_nonbasic_horn(f, p);
}

}  // namespace

HornClassification classify_horn(const FOFormula& raw) {
  FOFormula f = normalize(raw);
  HornClassification r;
  Path p;

  p.clear();
  if (auto w = find_nonbasic_horn(f, p)) {
    r.witnesses["basic_horn"] = path_str(*w, at_path(f, *w));
  } else {
    r.basic_horn = true;
  }

  p.clear();
  if (auto w = find_nonhorn(f, p)) {
    r.witnesses["horn"] = path_str(*w, at_path(f, *w));
  } else {
    r.horn = true;
  }
  return r;
}

}  // namespace cmt

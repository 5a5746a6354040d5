#include "cmt/product.hpp"

#include "cmt/errors.hpp"

namespace cmt {

IndexedFamily::IndexedFamily(std::vector<GeneralStructure> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw vocab_error("a family needs at least one factor");
  for (size_t i = 1; i < factors_.size(); ++i)
    if (!(factors_[i].vocab() == factors_[0].vocab())) throw vocab_error("family factors have different vocabularies");
}

size_t IndexedFamily::universe_size() const {
  size_t n = 1;
  for (const auto& m : factors_) n *= m.universe();
  return n;
}

std::vector<int> IndexedFamily::coords(size_t element) const {
  std::vector<int> out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    out[i] = (int)(element % factors_[i].universe());
    element /= factors_[i].universe();
  }
  return out;
}

size_t IndexedFamily::element(const std::vector<int>& coords) const {
  size_t idx = 0;
  for (size_t i = factors_.size(); i-- > 0;) idx = idx * factors_[i].universe() + coords[i];
  return idx;
}

GeneralStructure pre_reduced_product(const IndexedFamily& fam, const Filter& f, const ProductOptions& opts) {
  if (fam.size() != f.index_size()) throw filter_error("filter index set does not match the family size");
  size_t n = fam.universe_size();
  if (n > opts.max_universe)
    throw size_error("product universe has " + std::to_string(n) + " elements, bound is " +
                     std::to_string(opts.max_universe));

  GeneralStructure out(fam.vocab_ptr(), (int)n);
  const Vocabulary& v = *fam.vocab_ptr();
  int k = fam.size();

  for (size_t c = 0; c < v.constants().size(); ++c) {
    std::vector<int> coords(k);
    for (int i = 0; i < k; ++i) coords[i] = fam.factor(i).constant((int)c);
    out.set_constant((int)c, (int)fam.element(coords));
  }

  for (size_t fi = 0; fi < v.functions().size(); ++fi) {
    int r = v.functions()[fi].arity;
    auto& table = out.fun_table((int)fi);
    std::vector<int> args, image(k);
    std::vector<std::vector<int>> arg_coords(r);
    for (size_t idx = 0; idx < table.size(); ++idx) {
      unflatten(idx, (int)n, r, args);
      for (int j = 0; j < r; ++j) arg_coords[j] = fam.coords(args[j]);
      std::vector<int> slot(r);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < r; ++j) slot[j] = arg_coords[j][i];
        image[i] = fam.factor(i).fun((int)fi, slot);
      }
      table[idx] = (int)fam.element(image);
    }
  }

  // limsup tables, row-parallel
  for (size_t p = 0; p < v.predicates().size(); ++p) {
    int r = v.predicates()[p].arity;
    auto& table = out.pred_table((int)p);
    long long rows = (long long)table.size();
    auto fill = [&](long long idx) {
      std::vector<int> args;
      unflatten((size_t)idx, (int)n, r, args);
      std::vector<std::vector<int>> arg_coords(r);
      for (int j = 0; j < r; ++j) arg_coords[j] = fam.coords(args[j]);
      std::vector<Value> x(k);
      std::vector<int> slot(r);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < r; ++j) slot[j] = arg_coords[j][i];
        x[i] = fam.factor(i).pred((int)p, slot);
      }
      table[idx] = limsup(f, x);
    };
    if (opts.parallel) {
#pragma omp parallel for schedule(static)
      for (long long idx = 0; idx < rows; ++idx) fill(idx);
    } else {
      for (long long idx = 0; idx < rows; ++idx) fill(idx);
    }
  }
  return out;
}

std::pair<GeneralStructure, QuotientMap> reduced_product(const IndexedFamily& fam, const Filter& f,
                                                         const ProductOptions& opts) {
  return reduce_structure(pre_reduced_product(fam, f, opts));
}

namespace {

void check_fo_family(const std::vector<FOStructure>& factors, const Filter& f) {
  if (factors.empty()) throw vocab_error("a family needs at least one factor");
  for (size_t i = 1; i < factors.size(); ++i)
    if (!(factors[i].vocab() == factors[0].vocab())) throw vocab_error("family factors have different vocabularies");
  if ((int)factors.size() != f.index_size()) throw filter_error("filter index set does not match the family size");
}

}  // namespace

FOStructure fo_reduced_product(const std::vector<FOStructure>& factors, const Filter& f, const ProductOptions& opts) {
  check_fo_family(factors, f);
  const std::vector<int>& kernel = f.kernel();
  size_t n = 1;
  for (int i : kernel) n *= factors[i].universe();
  if (n > opts.max_universe)
    throw size_error("product universe has " + std::to_string(n) + " elements, bound is " +
                     std::to_string(opts.max_universe));

  const VocabPtr& v = factors[0].vocab_ptr();
  FOStructure out(v, (int)n);
  size_t kc = kernel.size();

  auto decode = [&](size_t idx, std::vector<int>& coords) {
    coords.resize(kc);
    for (size_t i = 0; i < kc; ++i) {
      coords[i] = (int)(idx % factors[kernel[i]].universe());
      idx /= factors[kernel[i]].universe();
    }
  };
  auto encode = [&](const std::vector<int>& coords) {
    size_t idx = 0;
    for (size_t i = kc; i-- > 0;) idx = idx * factors[kernel[i]].universe() + coords[i];
    return idx;
  };

  for (size_t c = 0; c < v->constants().size(); ++c) {
    std::vector<int> coords(kc);
    for (size_t i = 0; i < kc; ++i) coords[i] = factors[kernel[i]].constant((int)c);
    out.set_constant((int)c, (int)encode(coords));
  }

  std::vector<int> args, slot;
  std::vector<std::vector<int>> arg_coords;
  for (size_t fi = 0; fi < v->functions().size(); ++fi) {
    int r = v->functions()[fi].arity;
    auto& table = out.fun_table((int)fi);
    arg_coords.assign(r, {});
    for (size_t idx = 0; idx < table.size(); ++idx) {
      unflatten(idx, (int)n, r, args);
      for (int j = 0; j < r; ++j) decode(args[j], arg_coords[j]);
      std::vector<int> image(kc);
      slot.resize(r);
      for (size_t i = 0; i < kc; ++i) {
        for (int j = 0; j < r; ++j) slot[j] = arg_coords[j][i];
        image[i] = factors[kernel[i]].fun((int)fi, slot);
      }
      table[idx] = (int)encode(image);
    }
  }

  for (size_t p = 0; p < v->predicates().size(); ++p) {
    int r = v->predicates()[p].arity;
    auto& table = out.pred_table((int)p);
    arg_coords.assign(r, {});
    for (size_t idx = 0; idx < table.size(); ++idx) {
      unflatten(idx, (int)n, r, args);
      for (int j = 0; j < r; ++j) decode(args[j], arg_coords[j]);
      bool holds = true;
      slot.resize(r);
      for (size_t i = 0; i < kc && holds; ++i) {
        for (int j = 0; j < r; ++j) slot[j] = arg_coords[j][i];
        holds = factors[kernel[i]].pred((int)p, slot);
      }
      table[idx] = holds ? 1 : 0;
    }
  }
  return out;
}

size_t fo_class_index(const std::vector<FOStructure>& factors, const Filter& f, const std::vector<int>& coords) {
  check_fo_family(factors, f);
  if (coords.size() != factors.size()) throw eval_error("coordinate tuple does not match the family");
  size_t idx = 0;
  const std::vector<int>& kernel = f.kernel();
  for (size_t i = kernel.size(); i-- > 0;) idx = idx * factors[kernel[i]].universe() + coords[kernel[i]];
  return idx;
}

}  // namespace cmt

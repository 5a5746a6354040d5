#include "cmt/filter.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

#include "cmt/errors.hpp"

namespace cmt {

Filter::Filter(int index_size, std::vector<int> kernel) : index_size_(index_size), kernel_(std::move(kernel)) {
  if (index_size_ < 1) throw filter_error("index set must be nonempty");
  std::sort(kernel_.begin(), kernel_.end());
  kernel_.erase(std::unique(kernel_.begin(), kernel_.end()), kernel_.end());
  if (kernel_.empty()) throw filter_error("improper filter: empty kernel");
  if (kernel_.front() < 0 || kernel_.back() >= index_size_) throw filter_error("kernel index out of range");
}

Filter Filter::full(int index_size) {
  std::vector<int> all(index_size);
  for (int i = 0; i < index_size; ++i) all[i] = i;
  return Filter(index_size, std::move(all));
}

Filter Filter::principal(int index_size, int i) { return Filter(index_size, {i}); }

bool Filter::contains(const std::vector<int>& j) const {
  for (int e : kernel_)
    if (std::find(j.begin(), j.end(), e) == j.end()) return false;
  return true;
}

Filter filter_from_subbasis(int index_size, const std::vector<std::vector<int>>& sets) {
  if (index_size < 1) throw filter_error("index set must be nonempty");
  std::vector<char> in(index_size, 1);
  for (const auto& s : sets) {
    std::vector<char> here(index_size, 0);
    for (int e : s) {
      if (e < 0 || e >= index_size) throw filter_error("subbasis index out of range");
      here[e] = 1;
    }
    for (int i = 0; i < index_size; ++i) in[i] = in[i] && here[i];
  }
  std::vector<int> kernel;
  for (int i = 0; i < index_size; ++i)
    if (in[i]) kernel.push_back(i);
  if (kernel.empty()) throw filter_error("improper filter: subbasis has empty intersection");
  return Filter(index_size, std::move(kernel));
}

std::vector<Filter> ultrafilters_extending(const Filter& f) {
  std::vector<Filter> out;
  out.reserve(f.kernel().size());
  for (int i : f.kernel()) out.push_back(Filter::principal(f.index_size(), i));
  return out;
}

Value limsup_by_definition(const Filter& f, const std::vector<Value>& x) {
  if ((int)x.size() != f.index_size()) throw eval_error("sequence length does not match the index set");
  // enumerate members of the filter: supersets of the kernel
  std::vector<int> rest;
  for (int i = 0; i < f.index_size(); ++i)
    if (!std::binary_search(f.kernel().begin(), f.kernel().end(), i)) rest.push_back(i);
  Value best = Value::one();
  bool first = true;
  for (size_t mask = 0; mask < (size_t(1) << rest.size()); ++mask) {
    Value sup = Value::zero();
    for (int i : f.kernel()) sup = vmax(sup, x[i]);
    for (size_t b = 0; b < rest.size(); ++b)
      if (mask & (size_t(1) << b)) sup = vmax(sup, x[rest[b]]);
    best = first ? sup : vmin(best, sup);
    first = false;
  }
  return best;
}

Value limsup(const Filter& f, const std::vector<Value>& x) {
  if ((int)x.size() != f.index_size()) throw eval_error("sequence length does not match the index set");
  Value v = Value::zero();
  for (int i : f.kernel()) v = vmax(v, x[i]);
#ifndef NDEBUG
  if (f.index_size() <= 10) assert(v == limsup_by_definition(f, x));
#endif
  return v;
}

Filter parse_filter_spec(std::string_view spec, int index_size) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    int v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw filter_error("bad index in filter spec: '" + std::string(s) + "'");
    return v;
  };
  auto parse_list = [&](std::string_view s) {
    std::vector<int> out;
    while (!s.empty()) {
      auto comma = s.find(',');
      out.push_back(parse_int(strip(s.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return out;
  };

  spec = strip(spec);
  if (spec == "full") return Filter::full(index_size);
  if (spec.starts_with("kernel=")) {
    return Filter(index_size, parse_list(spec.substr(7)));
  }
  if (spec.starts_with("subbasis=")) {
    std::string_view body = spec.substr(9);
    std::vector<std::vector<int>> sets;
    while (!body.empty()) {
      body = strip(body);
      if (body.empty()) break;
      if (body.front() != '{') throw filter_error("expected '{' in subbasis spec");
      auto close = body.find('}');
      if (close == std::string_view::npos) throw filter_error("unterminated '{' in subbasis spec");
      sets.push_back(parse_list(strip(body.substr(1, close - 1))));
      body.remove_prefix(close + 1);
      body = strip(body);
      if (!body.empty()) {
        if (body.front() != ';') throw filter_error("expected ';' between subbasis sets");
        body.remove_prefix(1);
      }
    }
    return filter_from_subbasis(index_size, sets);
  }
  throw filter_error("bad filter spec: '" + std::string(spec) + "' (want full, kernel=..., or subbasis=...)");
}

}  // namespace cmt

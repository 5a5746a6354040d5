#pragma once

#include <string_view>
#include <vector>

#include "cmt/value.hpp"

namespace cmt {

// Proper filter on the finite index set {0, .., n-1}, stored by its kernel:
// J belongs to the filter iff J contains the kernel.  On a finite index set
// every proper filter has this form and every ultrafilter is principal.
class Filter {
 public:
  Filter(int index_size, std::vector<int> kernel);

  static Filter full(int index_size);       // the filter {I} itself
  static Filter principal(int index_size, int i);

  int index_size() const { return index_size_; }
  const std::vector<int>& kernel() const { return kernel_; }  // sorted
  bool ultra() const { return kernel_.size() == 1; }

  bool contains(const std::vector<int>& j) const;  // j a subset of I

  bool operator==(const Filter& o) const { return index_size_ == o.index_size_ && kernel_ == o.kernel_; }

 private:
  int index_size_;
  std::vector<int> kernel_;
};

// Smallest filter containing every listed set: kernel is their intersection
// (or all of I when the list is empty).  Throws filter_error when the
// intersection is empty, i.e. the family has no proper extension.
Filter filter_from_subbasis(int index_size, const std::vector<std::vector<int>>& sets);

// All ultrafilters refining f: one principal ultrafilter per kernel point.
std::vector<Filter> ultrafilters_extending(const Filter& f);

// Limit superior of x along f.  Computed as the max over the kernel; equal to
// the textbook inf-over-members of sup-over-the-member route, which
// limsup_by_definition evaluates literally (exponential, for cross-checks).
// Debug builds compute both on small index sets and assert agreement.
Value limsup(const Filter& f, const std::vector<Value>& x);
Value limsup_by_definition(const Filter& f, const std::vector<Value>& x);

// "full" | "kernel=0,2" | "subbasis={0,1};{1,2}"
Filter parse_filter_spec(std::string_view spec, int index_size);

}  // namespace cmt

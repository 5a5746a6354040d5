#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmt/leibniz.hpp"
#include "cmt/structure.hpp"

namespace cmt {

// Dyadic threshold grid {j/2^k : 0 <= j < 2^k}.  Note 1 is not a grid point.
struct Grid {
  int k;
  explicit Grid(int k);

  long long den() const { return 1ll << k; }
  Value point(long long j) const;
  bool admits(Value v) const;  // v on grid or v == 1
};

std::string threshold_name(const std::string& base, long long j, long long den);

// Inverse of threshold_name.  The base may itself contain "_le_"; the level
// and denominator are the last two underscore fields.
struct ThresholdName {
  std::string base;
  long long j = 0;
  long long den = 0;
};
std::optional<ThresholdName> parse_threshold_name(const std::string& name);

// Recovered view of a threshold-shaped FO vocabulary: which continuous
// vocabulary it came from and where each threshold predicate sits.
struct ThresholdInfo {
  VocabPtr original;
  int k = 0;
  std::vector<std::vector<int>> fo_pred;  // [original pred][j] -> FO pred index
};

// Throws vocab_error unless every predicate is some base_le_j_den with a
// single power-of-two den and, per base, a complete run j = 0..den-1 of equal
// arity.
ThresholdInfo threshold_info(const Vocabulary& fo_vocab);

// Same functions and constants; each n-ary predicate P becomes the n-ary
// threshold family P_le_0_den .. P_le_(den-1)_den.
VocabPtr vocab_down(const Vocabulary& v, Grid g);

// Two-valued rendering of a reduced structure: P_le_r holds iff the value of
// P is at most r.  Values off grid-or-1 still translate (the thresholds that
// do hold are honest) but lose precision; one warning per predicate is
// appended when a caller asks for them.  Throws structure_error if m is not
// reduced.
FOStructure structure_down(const GeneralStructure& m, Grid g, std::vector<std::string>* warnings = nullptr);

// Thresholds widen as r grows: P_le_r implies P_le_s for r <= s, every
// predicate, every tuple.  False reports carry the first violation.
bool is_increasing(const FOStructure& k, std::string* violation = nullptr);

// Continuous reading of an increasing threshold structure: P takes the least
// grid value whose threshold holds, or 1 when none does.  Unreduced; exposed
// for debugging the round trip.
GeneralStructure structure_up_raw(const FOStructure& k, Grid g);

// structure_up_raw followed by Leibniz reduction.  Throws structure_error if
// k is not increasing, vocab_error if its vocabulary is not threshold-shaped
// or disagrees with g.
GeneralStructure structure_up(const FOStructure& k, Grid g);

}  // namespace cmt

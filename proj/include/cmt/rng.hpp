#pragma once

#include <cstdint>

namespace cmt {

// splitmix64.  Tiny, fully portable, and plenty for test-instance
// generation; the draws below are what keep reports replayable across
// platforms, so no distribution machinery from <random> is involved.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform-ish in 0..n-1 (modulo bias is irrelevant at test scale)
  int below(int n) { return (int)(next() % (std::uint64_t)n); }

  bool chance(int num, int den) { return below(den) < num; }
};

// independent per-trial stream from a master seed
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  Rng r(master ^ (0xd1b54a32d192ed03ull * (stream + 1)));
  return r.next();
}

}  // namespace cmt

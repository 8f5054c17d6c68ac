#pragma once

#include <cstdint>

namespace exalg {

// splitmix64: the single PRNG used everywhere randomness is called for.
// All library-internal searches run with fixed seeds so every operation
// is a pure function of its inputs.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  // uniform in [lo, hi] inclusive
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // fork a child stream; used to keep sub-tasks independent of draw order
  SplitMix64 fork() { return SplitMix64(next() ^ 0xa5a5a5a5a5a5a5a5ULL); }
};

}  // namespace exalg

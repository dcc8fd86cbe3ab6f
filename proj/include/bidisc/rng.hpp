#ifndef BIDISC_RNG_HPP
#define BIDISC_RNG_HPP

#include <cstdint>

namespace bidisc {

// splitmix64: tiny, portable, fully deterministic across platforms.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t m) { return next() % m; }
  long range(long lo, long hi) { return lo + (long)below((std::uint64_t)(hi - lo + 1)); }
};

}  // namespace bidisc

#endif

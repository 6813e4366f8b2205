#pragma once
#include <cstdint>

namespace er {

// splitmix64: deterministic, cheap, and usable counter-style (seed + index),
// which keeps parallel sampling loops order-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t r = splitmix64(state);
    state += 0x9e3779b97f4a7c15ull;
    return r;
  }
  // uniform in [0, n) by rejection-free multiply-shift (n << 2^64 here)
  std::uint64_t below(std::uint64_t n) { return std::uint64_t((__uint128_t(next()) * n) >> 64); }
};

}  // namespace er

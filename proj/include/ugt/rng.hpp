#pragma once

#include <cstdint>

namespace ugt {

// splitmix64: tiny, deterministic across platforms.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed = 0x8d2655a79c6bd6f3ull) : state(seed) {}

  uint64_t operator()() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? (*this)() % n : 0; }
};

}  // namespace ugt

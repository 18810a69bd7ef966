#pragma once

#include <cstdint>

namespace inv {

// splitmix64 with the standard published constants. Identical seeds yield
// bit-identical streams on all platforms.
struct SplitMix64 {
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state;
};

// Bit j of each output word is consumed lowest-first.
struct BitStream {
  explicit BitStream(std::uint64_t seed) : gen(seed) {}

  int next_bit() {
    if (left == 0) {
      word = gen.next();
      left = 64;
    }
    int b = static_cast<int>(word & 1);
    word >>= 1;
    --left;
    return b;
  }

  SplitMix64 gen;
  std::uint64_t word = 0;
  int left = 0;
};

}  // namespace inv

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace arena {

// splitmix64 finalizer; used for seed derivation so that generators stay
// pure functions of their seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent child seed from a base seed and a stream index.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ (splitmix64(index) + 0x9e3779b97f4a7c15ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(base, a), b);
}

// Thin deterministic RNG over std::mt19937_64.
//
// std::uniform_*_distribution output is implementation-defined, so the
// bounded draws here are hand-rolled: mt19937_64 itself is fully specified
// by the standard, which makes every stream reproducible across compilers.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive. Mask-and-reject, unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo);
    if (range == 0) return lo;
    std::uint64_t mask = range;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t draw;
    do {
      draw = engine_() & mask;
    } while (draw > range);
    return lo + static_cast<std::int64_t>(draw);
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform_real01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Fisher-Yates shuffle with this stream's draws.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace arena

#pragma once

#include <array>
#include <cstdint>

namespace upset {

// SplitMix64 finalizer (Steele/Lea/Flood). Used for seed derivation so that
// per-trial streams are reproducible across platforms and worker counts.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t splitmix64_gamma = 0x9e3779b97f4a7c15ULL;

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() { return splitmix64_mix(state += splitmix64_gamma); }
};

// Seed of trial i under a master seed: the i-th output of the SplitMix64
// stream started at the master seed. Fixed protocol; changing it would change
// every published report.
inline std::uint64_t trial_seed(std::uint64_t master_seed,
                                std::uint64_t trial_index) {
  return splitmix64_mix(master_seed + (trial_index + 1) * splitmix64_gamma);
}

// xoshiro256** (Blackman/Vigna), seeded through SplitMix64 as its authors
// recommend. Plain integer ops only, so streams are identical everywhere.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, bound) by rejection of the overhanging range.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace upset

#pragma once

#include <cstdint>

namespace octo {

// SplitMix64. Cheap, reproducible across platforms: results depend only on
// the seed, never on the host or the thread schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Independent stream for one trial of a seeded run. Every trial draws from
// its own substream, so results are identical no matter how trials are
// scheduled across threads.
inline Rng substream(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^
                   (trial * 0xda942042e4dd58b5ull + 0x243f6a8885a308d3ull)));
}

}  // namespace octo

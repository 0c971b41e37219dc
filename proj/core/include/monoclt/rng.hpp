#pragma once

#include <cstdint>

namespace monoclt {

// Counter-based splittable generator: each stream is keyed by
// (master seed, stream index), so results do not depend on scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 keyed_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return SplitMix64(mixer.next_u64());
}

}  // namespace monoclt

#pragma once

#include <cstdint>

namespace gts {

// SplitMix64 (Steele, Lea, Flood; JDK 8 SplittableRandom finalizer).
// Chosen because the harness needs a seedable, splittable stream with a
// documented algorithm: derived streams depend only on (seed, key), never
// on draw order, so per-configuration work is order-independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Lemire multiply-shift; deterministic.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return next_double() < p; }

  // Independent stream for (this seed, key): two mix rounds over seed ^ f(key).
  SplitMix64 derive(std::uint64_t key) const {
    SplitMix64 mixer(state_ ^ (key * 0xda942042e4dd58b5ull + 0x9e3779b97f4a7c15ull));
    mixer.next();
    return SplitMix64(mixer.next());
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace gts

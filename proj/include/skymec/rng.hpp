#pragma once

#include <cstdint>

namespace skymec {

// Portable seedable generator (SplitMix64). The state-update rule is pinned
// so instances can be reproduced from (seed, draw order) in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// Derived draws:
//   unit()          = (output >> 11) * 2^-53, in [0, 1)
//   uniform(a, b)   = a + (b - a) * unit()
//   uniform_int(n)  = floor(unit() * n), clamped to n - 1
//   normal(mu, sd)  = mu + sd * sqrt(-2 ln max(u1, 2^-53)) * cos(2 pi u2),
//                     consuming exactly two unit() draws (u1 then u2)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  std::int64_t uniform_int(std::int64_t n) {
    const auto v = static_cast<std::int64_t>(unit() * static_cast<double>(n));
    return v >= n ? n - 1 : v;
  }

  double normal(double mean, double sd);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace skymec

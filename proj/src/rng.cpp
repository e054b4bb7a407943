#include "skymec/rng.hpp"

#include <cmath>

namespace skymec {

double SplitMix64::normal(double mean, double sd) {
  double u1 = unit();
  if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
  const double u2 = unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  constexpr double two_pi = 6.283185307179586476925286766559;
  return mean + sd * r * std::cos(two_pi * u2);
}

}  // namespace skymec

#pragma once

#include "sgt/rational.hpp"

namespace sgt {

/// Slack granted to exact lengths when compared against a bound that
/// involves a logarithm and therefore exists only in floating point.
inline constexpr double kBoundTolerance = 1e-9;

/// exact <= bound + kBoundTolerance, comparing against the exact binary
/// value of the double so no rounding is introduced on the exact side.
inline bool within_bound(const Rational& exact, double bound) {
  return cmp(exact, Rational(bound + kBoundTolerance)) <= 0;
}

}  // namespace sgt

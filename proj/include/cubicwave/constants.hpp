#pragma once
// ============================================================================
// constants.hpp : mathematical constants used throughout the library
// ============================================================================

namespace cubicwave {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

/// Conserved-energy value separating bounded-well orbits from the rest of the
/// phase plane; trajectories on this level set admit closed hyperbolic forms.
inline constexpr double kQuarter = 0.25;

} // namespace cubicwave

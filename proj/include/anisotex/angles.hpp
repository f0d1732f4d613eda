#pragma once

// Orientation angles are axial quantities: theta and theta + pi describe the
// same direction. The canonical representative range is (-pi/2, pi/2].

#include <cmath>
#include <numbers>

namespace anisotex {

inline constexpr double kPi = std::numbers::pi;

/// Reduce an angle modulo pi into (-pi/2, pi/2]; -pi/2 maps to +pi/2.
inline double reduce_orientation(double theta) {
    double t = std::remainder(theta, kPi);  // exact, lands in [-pi/2, pi/2]
    if (t <= -0.5 * kPi) t += kPi;
    return t;
}

/// Pi-periodic angular distance min_k |a - b + k*pi|, in [0, pi/2].
inline double angle_distance(double a, double b) {
    return std::fabs(std::remainder(a - b, kPi));
}

}  // namespace anisotex

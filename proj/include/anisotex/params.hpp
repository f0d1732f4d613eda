#pragma once

#include <stdexcept>

#include "anisotex/angles.hpp"

namespace anisotex {

enum class Window {
    Indicator,  // hard angular cone
    Gaussian,   // std dev alpha, truncated beyond 3*alpha
};

// Parameters of an elementary field: spectral power law of exponent `hurst`
// restricted to the angular cone of half-width `alpha` around `alpha0`.
struct ElementaryParams {
    double hurst;   // in (0, 1), boundaries excluded
    double alpha0;  // cone axis, stored reduced into (-pi/2, pi/2]
    double alpha;   // cone half-width, in (0, pi/2]
    Window window = Window::Indicator;

    ElementaryParams(double hurst_, double alpha0_, double alpha_,
                     Window window_ = Window::Indicator)
        : hurst(hurst_),
          alpha0(reduce_orientation(alpha0_)),
          alpha(alpha_),
          window(window_) {
        if (!(hurst > 0.0 && hurst < 1.0))
            throw std::invalid_argument("ElementaryParams: hurst must lie strictly in (0,1)");
        if (!(alpha > 0.0 && alpha <= 0.5 * kPi))
            throw std::invalid_argument("ElementaryParams: alpha must lie in (0, pi/2]");
    }
};

}  // namespace anisotex

#pragma once

// Spectral model of the elementary field: normalization gamma(H), angular
// cone weight, variogram by adaptive quadrature and the covariance derived
// from it.
//
// The variogram of a field with cone weight c and Hurst index H is
//
//   v(x) = gamma(H) * integral over one angular period of
//          c(theta) * |x . u(theta)|^{2H} dtheta,
//
// with u(theta) = (cos theta, sin theta) and
// gamma(H) = pi / (2 H Gamma(2H) sin(H pi)).  The covariance of the field
// pinned at the origin is Cov(x, y) = v(x) + v(y) - v(x - y).

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "anisotex/angles.hpp"
#include "anisotex/params.hpp"
#include "anisotex/vec2.hpp"

namespace anisotex {

/// Normalization constant gamma(H) = pi / (2 H Gamma(2H) sin(H pi)).
inline double gamma_factor(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("gamma_factor: hurst must lie strictly in (0,1)");
    return kPi / (2.0 * hurst * std::tgamma(2.0 * hurst) * std::sin(hurst * kPi));
}

/// Angular window c_{alpha0,alpha}(theta), pi-periodic, values in [0,1].
/// Indicator: 1 on the closed cone [alpha0 - alpha, alpha0 + alpha].
/// Gaussian: exp(-d^2 / (2 alpha^2)), truncated to 0 where d > 3 alpha.
inline double cone_weight(double alpha0, double alpha, Window window, double theta) {
    const double d = angle_distance(theta, alpha0);
    if (window == Window::Indicator) return d <= alpha ? 1.0 : 0.0;
    if (d > 3.0 * alpha) return 0.0;
    const double z = d / alpha;
    return std::exp(-0.5 * z * z);
}

inline double cone_weight(const ElementaryParams& params, double theta) {
    return cone_weight(params.alpha0, params.alpha, params.window, theta);
}

/// Angular support half-width of the cone weight: alpha for the indicator
/// window, 3*alpha for the Gaussian one (values beyond are exactly zero).
inline double cone_support(const ElementaryParams& params) {
    return params.window == Window::Indicator ? params.alpha : 3.0 * params.alpha;
}

/// Variogram v(x); adaptive Gauss-Kronrod quadrature with the integration
/// interval split at the kink of |x . u(theta)|.
inline double variogram(const ElementaryParams& params, Vec2 x) {
    if (x.x == 0.0 && x.y == 0.0) return 0.0;

    // The weight vanishes outside [alpha0 - s, alpha0 + s]; s = pi/2 covers
    // exactly one full period.
    const double s = std::min(cone_support(params), 0.5 * kPi);
    const double lo = params.alpha0 - s;
    const double hi = params.alpha0 + s;

    // x . u(theta) vanishes at theta = atan2(y, x) + pi/2 (mod pi); the
    // |.|^{2H} factor has unbounded derivative there, so split the interval.
    double kink = std::atan2(x.y, x.x) + 0.5 * kPi;
    kink -= std::floor((kink - lo) / kPi) * kPi;  // representative in [lo, lo + pi)

    std::array<double, 3> pts{lo, hi, hi};
    std::size_t npts = 2;
    if (kink > lo && kink < hi) pts = {lo, kink, hi}, npts = 3;

    const double h2 = 2.0 * params.hurst;
    auto integrand = [&](double t) {
        return cone_weight(params, t) * std::pow(std::fabs(dot(x, unit_vector(t))), h2);
    };

    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < npts; ++i)
        sum += gk::integrate(integrand, pts[i], pts[i + 1], 30, 1e-12);
    return gamma_factor(params.hurst) * sum;
}

/// Covariance of the origin-pinned field: v(x) + v(y) - v(x - y).
inline double covariance(const ElementaryParams& params, Vec2 x, Vec2 y) {
    return variogram(params, x) + variogram(params, y) - variogram(params, x - y);
}

}  // namespace anisotex

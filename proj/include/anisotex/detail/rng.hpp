#pragma once

// Deterministic random primitives. mt19937_64 is specified bit-exactly by the
// standard; the Gaussian transform is pinned here because
// std::normal_distribution is implementation-defined, and seeded runs must
// reproduce byte-identical output.

#include <cmath>
#include <cstdint>
#include <random>

namespace anisotex::detail {

/// i-th output of a splitmix64 stream seeded with `seed`; used to derive
/// independent per-band subseeds from one run seed.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// N(0,1) stream over mt19937_64 via Box-Muller; consumes exactly two engine
// draws per sample pair, in a fixed order.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPiLocal * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static constexpr double kPiLocal = 3.141592653589793238462643383279502884;

    // Uniform in (0, 1]; excluding 0 keeps log() finite.
    double uniform01() { return ((engine_() >> 11) + 1) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace anisotex::detail

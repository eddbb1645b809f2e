#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qthermo {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen for bit-reproducible streams
// across platforms; the state update and output mix are fixed by the
// published constants, unlike std:: distributions whose algorithms are
// implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1], safe under log()
    double uniform01_open_low() { return 1.0 - uniform01(); }

    // Box-Muller pair; both values always consumed from the stream so the
    // draw count per call is fixed.
    void gaussian_pair(double& g0, double& g1) {
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        g0 = radius * std::cos(angle);
        g1 = radius * std::sin(angle);
    }

private:
    std::uint64_t state_;
};

}  // namespace qthermo

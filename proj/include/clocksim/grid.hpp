#pragma once

#include <cstddef>

#include "clocksim/errors.hpp"

namespace clocksim {

/// Uniform 1-D grid of n points x_i = x_min + i*dx, i in [0, n).
/// x_max is the periodic wrap point and is not itself a sample.
/// n must be a power of two (radix-2 spectral transforms) and at least 8.
struct Grid1D {
    double x_min = -1.0;
    double x_max = 1.0;
    std::size_t n = 8;

    void validate() const {
        if (!(x_max > x_min)) throw GridInvalid("grid: x_max must exceed x_min");
        if (n < 8) throw GridInvalid("grid: need at least 8 points");
        if ((n & (n - 1)) != 0) throw GridInvalid("grid: point count must be a power of two");
    }

    double length() const { return x_max - x_min; }
    double dx() const { return length() / static_cast<double>(n); }
    double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }

    bool operator==(const Grid1D&) const = default;
};

}  // namespace clocksim

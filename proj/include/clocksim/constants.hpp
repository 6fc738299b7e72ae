#pragma once

#include "clocksim/errors.hpp"

namespace clocksim {

/// Physical constants of one simulation run. Either a consistent SI set or a
/// dimensionless set (hbar = m = 1 with user-chosen c and g).
struct Constants {
    double c = 10.0;    ///< speed of light
    double g = 1.0;     ///< uniform gravitational acceleration, >= 0
    double hbar = 1.0;  ///< reduced Planck constant
    double m = 1.0;     ///< particle rest mass

    void validate() const {
        if (!(c > 0.0)) throw InvalidInput("constants: c must be positive");
        if (!(hbar > 0.0)) throw InvalidInput("constants: hbar must be positive");
        if (!(m > 0.0)) throw InvalidInput("constants: m must be positive");
        if (!(g >= 0.0)) throw InvalidInput("constants: g must be non-negative");
    }

    double mc2() const { return m * c * c; }
};

/// CODATA-style SI values for a neutron near the Earth's surface.
inline Constants si_neutron_constants() {
    Constants k;
    k.c = 2.99792458e8;
    k.g = 9.81;
    k.hbar = 1.054572e-34;
    k.m = 1.67493e-27;
    return k;
}

}  // namespace clocksim

#pragma once

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

namespace clocksim {

enum class PotentialKind {
    zero,               ///< U = 0
    mass_only_linear,   ///< U = -m*g*x
    cancelling_linear,  ///< U = -(m + E_k/c^2)*g*x, level-dependent
    harmonic,           ///< U = m*omega^2*(x - center)^2 / 2
    hard_floor,         ///< U = +inf below the floor, 0 above (Dirichlet wall)
};

/// External potential U_ext(x; E_k). Only the fields of the active kind matter.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::zero;
    double center = 0.0;  ///< harmonic trap center
    double omega = 0.0;   ///< harmonic angular frequency, > 0
    double floor = 0.0;   ///< hard floor position

    static PotentialSpec Zero() { return {PotentialKind::zero, 0, 0, 0}; }
    static PotentialSpec MassOnlyLinear() { return {PotentialKind::mass_only_linear, 0, 0, 0}; }
    static PotentialSpec CancellingLinear() { return {PotentialKind::cancelling_linear, 0, 0, 0}; }
    static PotentialSpec Harmonic(double center, double omega) {
        return {PotentialKind::harmonic, center, omega, 0};
    }
    static PotentialSpec HardFloor(double floor) { return {PotentialKind::hard_floor, 0, 0, floor}; }

    void validate() const {
        if (kind == PotentialKind::harmonic && !(omega > 0.0))
            throw InvalidInput("potential: harmonic omega must be positive");
    }

    bool operator==(const PotentialSpec&) const = default;
};

const char* potential_kind_name(PotentialKind kind);

/// U_ext(x; E_k) alone. Throws OutOfDomain for x below a hard floor.
double u_ext(const PotentialSpec& spec, const Constants& konst, double energy, double x);

/// d U_ext / d E_k at fixed x; nonzero only for the cancelling potential.
/// This is what distinguishes a clock's displayed rate from its proper time.
double u_ext_level_derivative(const PotentialSpec& spec, const Constants& konst, double x);

/// Full block potential V_k(x) = (m + E_k/c^2)*g*x + E_k + U_ext(x; E_k).
/// Terms are combined with compensated summation so the cancelling potential
/// yields exactly E_k at every x.
double potential_profile(const PotentialSpec& spec, const Constants& konst, double energy, double x);

/// -dV_k/dx, the force entering the classical block dynamics. Exactly zero
/// for the cancelling potential. The hard floor contributes only through
/// reflection, not through this slope.
double block_force(const PotentialSpec& spec, const Constants& konst, double energy, double x);

}  // namespace clocksim

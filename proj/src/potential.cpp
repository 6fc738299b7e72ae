#include "clocksim/potential.hpp"

#include <array>
#include <cmath>

#include "clocksim/numeric.hpp"

namespace clocksim {

namespace {

// (m + E_k/c^2)*g*x, shared between the gravity term of V_k and the
// cancelling potential so the two cancel bitwise under compensated summation.
double gravity_coupling(const Constants& konst, double energy, double x) {
    return (konst.m + energy / (konst.c * konst.c)) * konst.g * x;
}

}  // namespace

const char* potential_kind_name(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::mass_only_linear: return "mass_only_linear";
        case PotentialKind::cancelling_linear: return "cancelling_linear";
        case PotentialKind::harmonic: return "harmonic";
        case PotentialKind::hard_floor: return "hard_floor";
    }
    return "unknown";
}

double u_ext(const PotentialSpec& spec, const Constants& konst, double energy, double x) {
    switch (spec.kind) {
        case PotentialKind::zero:
            return 0.0;
        case PotentialKind::mass_only_linear:
            return -(konst.m * konst.g * x);
        case PotentialKind::cancelling_linear:
            return -gravity_coupling(konst, energy, x);
        case PotentialKind::harmonic: {
            const double d = x - spec.center;
            return 0.5 * konst.m * spec.omega * spec.omega * d * d;
        }
        case PotentialKind::hard_floor:
            if (x < spec.floor) throw OutOfDomain("potential: point below the hard floor");
            return 0.0;
    }
    throw InvalidInput("potential: unknown kind");
}

double u_ext_level_derivative(const PotentialSpec& spec, const Constants& konst, double x) {
    if (spec.kind == PotentialKind::cancelling_linear) return -konst.g * x / (konst.c * konst.c);
    return 0.0;
}

double potential_profile(const PotentialSpec& spec, const Constants& konst, double energy, double x) {
    if (!std::isfinite(x)) throw InvalidInput("potential: x must be finite");
    spec.validate();
    const std::array<double, 3> terms = {
        gravity_coupling(konst, energy, x),
        u_ext(spec, konst, energy, x),
        energy,
    };
    return compensated_sum(terms);
}

double block_force(const PotentialSpec& spec, const Constants& konst, double energy, double x) {
    const double grav_slope = (konst.m + energy / (konst.c * konst.c)) * konst.g;
    switch (spec.kind) {
        case PotentialKind::zero:
            return -grav_slope;
        case PotentialKind::mass_only_linear:
            return -(energy / (konst.c * konst.c)) * konst.g;
        case PotentialKind::cancelling_linear:
            return 0.0;
        case PotentialKind::harmonic:
            return -(grav_slope + konst.m * spec.omega * spec.omega * (x - spec.center));
        case PotentialKind::hard_floor:
            return -grav_slope;
    }
    throw InvalidInput("potential: unknown kind");
}

}  // namespace clocksim

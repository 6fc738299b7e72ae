#pragma once

#include <cstddef>
#include <vector>

#include "clocksim/constants.hpp"
#include "clocksim/potential.hpp"

namespace clocksim {

/// Point particle with an attached clock phase.
struct ClassicalState {
    double x = 0.0;    ///< position
    double p = 0.0;    ///< momentum
    double phi = 0.0;  ///< accumulated internal clock phase
    double t = 0.0;    ///< coordinate time
};

struct Trajectory {
    std::vector<ClassicalState> samples;  ///< every record_every-th step, start included
    double dt = 0.0;
    double energy = 0.0;  ///< internal level E0 the block was built for
    PotentialKind potential = PotentialKind::zero;
};

/// Proper-time rate along a world line: 1 - p^2/(2 m^2 c^2) + g*x/c^2.
/// Independent of the external potential.
double clock_rate(double x, double p, const Constants& konst);

/// Rate at which the internal phase of level E0 advances. Equals clock_rate
/// except for the cancelling potential, whose explicit H0 coupling shifts the
/// displayed frequency: r_eff = clock_rate + dU_ext/dE.
double effective_clock_rate(double x, double p, const Constants& konst, const PotentialSpec& spec);

/// Stationary solution of the block dynamics, if any.
struct StationaryPoint {
    bool everywhere = false;  ///< cancelling potential: force vanishes identically
    double x = 0.0;           ///< valid when !everywhere
};

/// For harmonic traps returns the sag point x_c - g(m + E0/c^2)/(m omega^2);
/// for the cancelling potential flags every point as stationary. Other
/// potentials throw NoStationaryPoint.
StationaryPoint stationary_point(const PotentialSpec& spec, double energy, const Constants& konst);

/// One kick-drift-kick leapfrog step of the block with eigenvalue E0,
///   xdot = 2 a0 p,  pdot = -V0'(x),
/// advancing phi by (E0/hbar) * r_eff(midpoint) * dt. A hard floor reflects
/// elastically (x -> 2 x_f - x, p -> -p) when the drift crosses the wall.
ClassicalState hamilton_step(const ClassicalState& state,
                             double energy,
                             const PotentialSpec& spec,
                             const Constants& konst,
                             double dt);

/// Repeated hamilton_step with compensated phase/time accumulation.
/// steps must be a multiple of record_every; the start state is sample 0.
Trajectory integrate(const ClassicalState& start,
                     double energy,
                     const PotentialSpec& spec,
                     const Constants& konst,
                     double dt,
                     std::size_t steps,
                     std::size_t record_every);

/// Block energy a0 p^2 + V0(x), conserved up to the leapfrog oscillation.
double block_energy(const ClassicalState& state,
                    double energy,
                    const PotentialSpec& spec,
                    const Constants& konst);

}  // namespace clocksim

#include "clocksim/classical.hpp"

#include <cmath>

#include "clocksim/blocks.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/numeric.hpp"

namespace clocksim {

double clock_rate(double x, double p, const Constants& konst) {
    const double c2 = konst.c * konst.c;
    return 1.0 - p * p / (2.0 * konst.m * konst.m * c2) + konst.g * x / c2;
}

double effective_clock_rate(double x, double p, const Constants& konst, const PotentialSpec& spec) {
    return clock_rate(x, p, konst) + u_ext_level_derivative(spec, konst, x);
}

StationaryPoint stationary_point(const PotentialSpec& spec, double energy, const Constants& konst) {
    switch (spec.kind) {
        case PotentialKind::harmonic: {
            const double slope = (konst.m + energy / (konst.c * konst.c)) * konst.g;
            return {false, spec.center - slope / (konst.m * spec.omega * spec.omega)};
        }
        case PotentialKind::cancelling_linear:
            return {true, 0.0};
        default:
            throw NoStationaryPoint("stationary_point: potential has no stationary point");
    }
}

namespace {

struct StepResult {
    double x;
    double p;
    double dphi;
};

StepResult leapfrog_core(double x, double p, double a0, double energy,
                         const PotentialSpec& spec, const Constants& konst, double dt) {
    const double p_half = p + 0.5 * dt * block_force(spec, konst, energy, x);
    double x_new = x + dt * 2.0 * a0 * p_half;
    double p_mid = p_half;
    if (spec.kind == PotentialKind::hard_floor) {
        while (x_new < spec.floor) {
            x_new = 2.0 * spec.floor - x_new;
            p_mid = -p_mid;
        }
    }
    const double p_new = p_mid + 0.5 * dt * block_force(spec, konst, energy, x_new);
    const double x_mid = 0.5 * (x + x_new);
    const double rate = effective_clock_rate(x_mid, p_mid, konst, spec);
    return {x_new, p_new, (energy / konst.hbar) * rate * dt};
}

}  // namespace

ClassicalState hamilton_step(const ClassicalState& state, double energy,
                             const PotentialSpec& spec, const Constants& konst, double dt) {
    if (!(dt > 0.0)) throw InvalidInput("hamilton_step: dt must be positive");
    const double a0 = kinetic_coefficient(konst.m, energy, konst.c);
    const StepResult r = leapfrog_core(state.x, state.p, a0, energy, spec, konst, dt);
    ClassicalState out{r.x, r.p, state.phi + r.dphi, state.t + dt};
    if (!std::isfinite(out.x) || !std::isfinite(out.p) || !std::isfinite(out.phi))
        throw NonFinite("hamilton_step: state left the representable range");
    return out;
}

Trajectory integrate(const ClassicalState& start, double energy, const PotentialSpec& spec,
                     const Constants& konst, double dt, std::size_t steps,
                     std::size_t record_every) {
    if (steps < 1) throw InvalidInput("integrate: need at least one step");
    if (record_every < 1 || steps % record_every != 0)
        throw InvalidInput("integrate: steps must be a positive multiple of record_every");
    if (spec.kind == PotentialKind::hard_floor && start.x < spec.floor)
        throw InvalidInput("integrate: start position below the hard floor");

    const double a0 = kinetic_coefficient(konst.m, energy, konst.c);
    Trajectory traj;
    traj.dt = dt;
    traj.energy = energy;
    traj.potential = spec.kind;
    traj.samples.reserve(steps / record_every + 1);
    traj.samples.push_back(start);

    double x = start.x;
    double p = start.p;
    CompensatedSum phi;
    phi.add(start.phi);
    for (std::size_t s = 1; s <= steps; ++s) {
        const StepResult r = leapfrog_core(x, p, a0, energy, spec, konst, dt);
        x = r.x;
        p = r.p;
        phi.add(r.dphi);
        if (!std::isfinite(x) || !std::isfinite(p))
            throw NonFinite("integrate: state left the representable range");
        if (s % record_every == 0) {
            traj.samples.push_back({x, p, phi.value(), start.t + static_cast<double>(s) * dt});
        }
    }
    return traj;
}

double block_energy(const ClassicalState& state, double energy, const PotentialSpec& spec,
                    const Constants& konst) {
    const double a0 = kinetic_coefficient(konst.m, energy, konst.c);
    return a0 * state.p * state.p + potential_profile(spec, konst, energy, state.x);
}

}  // namespace clocksim

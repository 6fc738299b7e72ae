#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "clocksim/constants.hpp"
#include "clocksim/state.hpp"

namespace clocksim {

/// Reduced internal density matrix rho_kl = integral psi_k psi_l* dx.
/// Hermitian with unit trace for a normalized joint state; its mixedness
/// certifies internal-external entanglement.
struct InternalDensity {
    std::size_t dim = 0;
    std::vector<cplx> rho;  ///< row-major dim x dim

    cplx at(std::size_t k, std::size_t l) const { return rho[k * dim + l]; }
};

InternalDensity reduced_internal(const JointState& state);

/// tr(rho^2); 1 for product states, 1/d for maximal internal dephasing.
double purity(const InternalDensity& rho);

/// Interferometric contrast of the (k, l) coherence: 2|rho_kl|, clamped to
/// [0, 1] when the two populations are equal (equal-amplitude preparation).
double visibility(const InternalDensity& rho, std::size_t k, std::size_t l);

/// Closed form |cos(g dx dE t / (2 hbar c^2))| for a two-level clock held in
/// an equal superposition of two fixed heights separated by dx. Ignores
/// packet spreading and trap zero-point motion (corrections are O(eps^2)).
double analytic_visibility(double d_energy, double dx, double t, const Constants& konst);

/// Fractional frequency shift (phi_high - phi_low) * hbar / (E0 * t) measured
/// between two accumulated clock phases. Equals g*dx/c^2 for clocks at rest
/// at heights differing by dx.
double redshift_from_phases(double phi_low, double phi_high, double energy, double t,
                            const Constants& konst);

/// g*h/c^2.
double analytic_redshift(double height, const Constants& konst);

/// Expectation values of a joint state. mean_p uses spectral differentiation;
/// reductions keep a fixed order so results are reproducible.
struct Expectations {
    double norm = 0.0;
    double mean_x = 0.0;
    double var_x = 0.0;
    double mean_p = 0.0;
    std::vector<double> level_populations;
};

Expectations expectations(const JointState& state, double hbar = 1.0);

}  // namespace clocksim

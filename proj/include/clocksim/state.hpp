#pragma once

#include <complex>
#include <vector>

#include "clocksim/clock.hpp"
#include "clocksim/grid.hpp"

namespace clocksim {

/// Joint internal (x) external state: one complex amplitude vector per
/// internal level, sampled on a shared grid. Total norm is kept at 1.
struct JointState {
    Grid1D grid;
    std::vector<std::vector<cplx>> psi;  ///< psi[level][grid index]
    double t = 0.0;

    std::size_t level_count() const { return psi.size(); }
};

/// Normalized Gaussian exp(-(x-center)^2/(4 sigma^2) + i p0 (x-center)/hbar)
/// sampled on the grid; |psi|^2 has standard deviation sigma.
std::vector<cplx> gaussian_packet(const Grid1D& grid, double center, double sigma, double p0,
                                  double hbar);

/// Ground state of a_k p^2 + (m omega_trap^2 / 2)(x - center)^2, the Gaussian
/// with sigma^2 = hbar sqrt(a_k / (2 m omega_trap^2)).
std::vector<cplx> oscillator_ground_state(const Grid1D& grid, double center, double kinetic,
                                          double m, double omega_trap, double hbar);

/// Product state: the same packet in every level, weighted by the internal
/// amplitudes. The packet is normalized first.
JointState product_state(const Grid1D& grid, const InternalClockSpec& clock,
                         std::vector<cplx> packet);

/// One (possibly different) packet per level, each weighted by its amplitude.
JointState per_level_state(const Grid1D& grid, const InternalClockSpec& clock,
                           std::vector<std::vector<cplx>> packets);

double norm_squared(const JointState& state);
double level_population(const JointState& state, std::size_t level);

/// |<a|b>| with the joint inner product sum_k integral conj(a_k) b_k dx.
double fidelity(const JointState& a, const JointState& b);

/// Scales psi so the total norm is exactly 1 (fixed summation order).
void normalize(JointState& state);
void normalize(std::vector<cplx>& vec, double dx);

}  // namespace clocksim

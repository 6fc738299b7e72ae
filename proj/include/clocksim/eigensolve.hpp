#pragma once

#include <cstddef>
#include <vector>

#include "clocksim/blocks.hpp"
#include "clocksim/constants.hpp"
#include "clocksim/grid.hpp"
#include "clocksim/parallel.hpp"

namespace clocksim {

/// Bound-state energies and (optionally) grid-sampled wavefunctions,
/// quadrature-normalized (sum v_i^2 dx = 1) with the first significant
/// component positive.
struct Spectrum {
    std::vector<double> energies;                    ///< strictly increasing
    std::vector<std::vector<double>> wavefunctions;  ///< full grid length, zero at walls
};

/// Lowest n_max eigenpairs of the central-difference discretization of
/// a_k p^2 + V_k(x) with Dirichlet boundaries (at the hard floor and at the
/// grid edges). Eigenvalues by Sturm-count bisection, eigenvectors by inverse
/// iteration; both deterministic. Throws NotConfining when the highest
/// requested energy exceeds the boundary potential.
Spectrum eigensolve_fd(const BlockHamiltonian& block, const Grid1D& grid, const Constants& konst,
                       std::size_t n_max, bool want_vectors = true, Exec exec = default_exec());

/// n-th negated zero of the Airy function Ai (a_1 = 2.33811...). Tabulated to
/// full double precision for n <= 10, asymptotic expansion beyond.
double airy_negated_zero(std::size_t n);

/// Gravitational bouncer levels (hbar^2 m g^2 / 2)^(1/3) * a_n, n = 1..n_max.
std::vector<double> bouncer_levels_airy(const Constants& konst, std::size_t n_max);

}  // namespace clocksim

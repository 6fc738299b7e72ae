#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "clocksim/blocks.hpp"
#include "clocksim/constants.hpp"
#include "clocksim/fft.hpp"
#include "clocksim/parallel.hpp"
#include "clocksim/state.hpp"

namespace clocksim {

/// Strang split-operator propagator on a periodic grid:
///   exp(-i V dt/2hbar) . exp(-i a_k kappa^2 hbar dt) . exp(-i V dt/2hbar)
/// per step and per level. Each factor is exactly unitary; levels evolve
/// independently and may be processed in parallel. Phase tables are built
/// once at construction so stepping is multiply-and-transform only.
///
/// Hard-floor blocks are rejected here; their Dirichlet walls conflict with
/// spectral periodicity and are handled by CrankNicolson instead.
class SplitOperator {
public:
    SplitOperator(const std::vector<BlockHamiltonian>& blocks, const Grid1D& grid,
                  const Constants& konst, double dt);

    double dt() const { return dt_; }

    /// Advances the state in place by the given number of steps.
    void advance(JointState& state, std::size_t steps, Exec exec = default_exec()) const;

private:
    std::shared_ptr<const Fft> plan_;
    Grid1D grid_;
    double dt_;
    // tables are snapped to the unit circle (nearest_unit_phase) so long runs
    // conserve per-level norms to a random walk, not a linear drift
    std::vector<std::vector<cplx>> half_v_phase_;
    std::vector<std::vector<cplx>> kinetic_phase_;  // carries the 1/n of the inverse transform
};

/// Crank-Nicolson propagator on the finite-difference Hamiltonian with
/// Dirichlet boundaries (the hard-floor evolution path). The Cayley form
/// (1 + i dt T/2hbar)^-1 (1 - i dt T/2hbar) is unitary for the discrete T,
/// and finite-difference eigenvectors are exactly stationary under it.
class CrankNicolson {
public:
    CrankNicolson(const std::vector<BlockHamiltonian>& blocks, const Grid1D& grid,
                  const Constants& konst, double dt);

    double dt() const { return dt_; }
    void advance(JointState& state, std::size_t steps, Exec exec = default_exec()) const;

private:
    struct LevelFactors {
        std::size_t begin = 0;           // first evolvable node
        double off = 0.0;                // constant off-diagonal of T
        std::vector<double> diag;        // diagonal of T over the window
        std::vector<cplx> pivot_inv;     // Thomas back-substitution reciprocals
        std::vector<cplx> multiplier;    // Thomas forward-elimination factors
    };
    Grid1D grid_;
    double dt_;
    double gamma_;  // dt / (2 hbar)
    std::vector<LevelFactors> levels_;
};

/// Split-operator evolution as a value-returning operation. Norm drift beyond
/// 1e-8 raises NonUnitary (an implementation bug, not a physics outcome).
JointState propagate(const JointState& state, const std::vector<BlockHamiltonian>& blocks,
                     const Constants& konst, double dt, std::size_t steps,
                     Exec exec = default_exec());

/// Crank-Nicolson evolution as a value-returning operation.
JointState propagate_cn(const JointState& state, const std::vector<BlockHamiltonian>& blocks,
                        const Constants& konst, double dt, std::size_t steps,
                        Exec exec = default_exec());

/// Exact one-shot evolution for blocks whose potential is constant over the
/// grid (the cancelling potential's free dynamics): a single spectral
/// multiplication by exp(-i (a_k kappa^2 hbar + V_k/hbar) t). Throws NotFree
/// if any V_k varies beyond 1e-14.
JointState free_reference_evolution(const JointState& state,
                                    const std::vector<BlockHamiltonian>& blocks,
                                    const Constants& konst, double dt, std::size_t steps,
                                    Exec exec = default_exec());

}  // namespace clocksim

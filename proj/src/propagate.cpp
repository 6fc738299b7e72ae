#include "clocksim/propagate.hpp"

#include <cmath>
#include <cstdio>

#include "clocksim/errors.hpp"

namespace clocksim {

namespace {

void check_match(const JointState& state, const std::vector<BlockHamiltonian>& blocks) {
    if (blocks.size() != state.level_count())
        throw GridMismatch("propagate: block count != state level count");
    for (const auto& b : blocks) {
        if (b.v.size() != state.grid.n)
            throw GridMismatch("propagate: block sampled on a different grid");
    }
    for (const auto& level : state.psi) {
        if (level.size() != state.grid.n)
            throw GridMismatch("propagate: state amplitudes do not match its grid");
    }
}

void check_unitarity(double norm_before, double norm_after) {
    if (std::fabs(norm_after - norm_before) > 1e-8) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "propagation drifted the norm by %.3e; implementation bug",
                      norm_after - norm_before);
        throw NonUnitary(msg);
    }
}

}  // namespace

SplitOperator::SplitOperator(const std::vector<BlockHamiltonian>& blocks, const Grid1D& grid,
                             const Constants& konst, double dt)
    : plan_(fft_plan(grid.n)), grid_(grid), dt_(dt) {
    if (!(dt > 0.0)) throw InvalidInput("propagate: dt must be positive");
    half_v_phase_.resize(blocks.size());
    kinetic_phase_.resize(blocks.size());
    // 1/n is a power of two, so folding it into the kinetic table keeps the
    // entries' unit-circle snapping exact
    const double inv_n = 1.0 / static_cast<double>(grid.n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& block = blocks[k];
        if (block.first_interior)
            throw InvalidInput(
                "propagate: hard-floor blocks need Crank-Nicolson (use propagate_cn)");
        half_v_phase_[k].resize(grid.n);
        kinetic_phase_[k].resize(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) {
            const long double angle = -static_cast<long double>(block.v[i]) * dt /
                                      (2.0L * static_cast<long double>(konst.hbar));
            half_v_phase_[k][i] = nearest_unit_phase(angle);
        }
        for (std::size_t j = 0; j < grid.n; ++j) {
            const double kappa = fft_wavenumber(j, grid.n, grid.length());
            const long double angle = -static_cast<long double>(block.kinetic) * konst.hbar *
                                      static_cast<long double>(kappa) *
                                      static_cast<long double>(kappa) * dt;
            kinetic_phase_[k][j] = nearest_unit_phase(angle) * inv_n;
        }
    }
}

void SplitOperator::advance(JointState& state, std::size_t steps, Exec exec) const {
    if (state.grid != grid_) throw GridMismatch("propagate: state grid differs from prepared grid");
    const auto levels = static_cast<std::ptrdiff_t>(state.level_count());
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t k = 0; k < levels; ++k) {
        auto& psi = state.psi[static_cast<std::size_t>(k)];
        const auto& vh = half_v_phase_[static_cast<std::size_t>(k)];
        const auto& kin = kinetic_phase_[static_cast<std::size_t>(k)];
        const std::size_t n = psi.size();
        for (std::size_t s = 0; s < steps; ++s) {
            for (std::size_t i = 0; i < n; ++i) psi[i] *= vh[i];
            plan_->forward(psi);
            for (std::size_t i = 0; i < n; ++i) psi[i] *= kin[i];
            plan_->inverse_unscaled(psi);
            for (std::size_t i = 0; i < n; ++i) psi[i] *= vh[i];
        }
    }
    state.t += static_cast<double>(steps) * dt_;
}

CrankNicolson::CrankNicolson(const std::vector<BlockHamiltonian>& blocks, const Grid1D& grid,
                             const Constants& konst, double dt)
    : grid_(grid), dt_(dt), gamma_(dt / (2.0 * konst.hbar)) {
    if (!(dt > 0.0)) throw InvalidInput("propagate: dt must be positive");
    const double dx = grid.dx();
    const double inv_dx2 = 1.0 / (dx * dx);
    levels_.reserve(blocks.size());
    for (const auto& block : blocks) {
        LevelFactors f;
        f.begin = block.interior_begin();
        f.off = -block.kinetic * konst.hbar * konst.hbar * inv_dx2;
        const std::size_t m = grid.n - f.begin;
        f.diag.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            f.diag[i] = 2.0 * block.kinetic * konst.hbar * konst.hbar * inv_dx2 +
                        block.v[f.begin + i];
        }
        // Thomas factorization of A = I + i*gamma*T, constant across steps.
        const cplx ig(0.0, gamma_);
        const cplx off_a = ig * f.off;
        f.pivot_inv.resize(m);
        f.multiplier.resize(m);
        cplx pivot = 1.0 + ig * f.diag[0];
        f.pivot_inv[0] = 1.0 / pivot;
        f.multiplier[0] = 0.0;
        for (std::size_t i = 1; i < m; ++i) {
            f.multiplier[i] = off_a * f.pivot_inv[i - 1];
            pivot = 1.0 + ig * f.diag[i] - f.multiplier[i] * off_a;
            f.pivot_inv[i] = 1.0 / pivot;
        }
        levels_.push_back(std::move(f));
    }
}

void CrankNicolson::advance(JointState& state, std::size_t steps, Exec exec) const {
    if (state.grid != grid_) throw GridMismatch("propagate: state grid differs from prepared grid");
    if (levels_.size() != state.level_count())
        throw GridMismatch("propagate: block count != state level count");
    const auto levels = static_cast<std::ptrdiff_t>(state.level_count());
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t k = 0; k < levels; ++k) {
        const auto& f = levels_[static_cast<std::size_t>(k)];
        auto& psi = state.psi[static_cast<std::size_t>(k)];
        const std::size_t m = f.diag.size();
        cplx* u = psi.data() + f.begin;
        std::vector<cplx> rhs(m);
        const cplx ig(0.0, gamma_);
        const cplx off_a = ig * f.off;
        for (std::size_t s = 0; s < steps; ++s) {
            // rhs = (I - i*gamma*T) psi, Dirichlet beyond the window
            for (std::size_t i = 0; i < m; ++i) {
                cplx t = f.diag[i] * u[i];
                if (i > 0) t += f.off * u[i - 1];
                if (i + 1 < m) t += f.off * u[i + 1];
                rhs[i] = u[i] - ig * t;
            }
            // forward elimination / back substitution with the cached factors
            for (std::size_t i = 1; i < m; ++i) rhs[i] -= f.multiplier[i] * rhs[i - 1];
            u[m - 1] = rhs[m - 1] * f.pivot_inv[m - 1];
            for (std::size_t i = m - 1; i-- > 0;) {
                u[i] = (rhs[i] - off_a * u[i + 1]) * f.pivot_inv[i];
            }
        }
    }
    state.t += static_cast<double>(steps) * dt_;
}

JointState propagate(const JointState& state, const std::vector<BlockHamiltonian>& blocks,
                     const Constants& konst, double dt, std::size_t steps, Exec exec) {
    check_match(state, blocks);
    const double norm_before = norm_squared(state);
    SplitOperator prop(blocks, state.grid, konst, dt);
    JointState out = state;
    prop.advance(out, steps, exec);
    check_unitarity(norm_before, norm_squared(out));
    return out;
}

JointState propagate_cn(const JointState& state, const std::vector<BlockHamiltonian>& blocks,
                        const Constants& konst, double dt, std::size_t steps, Exec exec) {
    check_match(state, blocks);
    const double norm_before = norm_squared(state);
    CrankNicolson prop(blocks, state.grid, konst, dt);
    JointState out = state;
    prop.advance(out, steps, exec);
    check_unitarity(norm_before, norm_squared(out));
    return out;
}

JointState free_reference_evolution(const JointState& state,
                                    const std::vector<BlockHamiltonian>& blocks,
                                    const Constants& konst, double dt, std::size_t steps,
                                    Exec exec) {
    check_match(state, blocks);
    for (const auto& block : blocks) {
        double lo = block.v[0], hi = block.v[0];
        for (double v : block.v) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > 1e-14 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi))))
            throw NotFree("free_reference_evolution: potential varies over the grid");
    }
    JointState out = state;
    if (steps == 0 || dt == 0.0) return out;

    const double t_total = dt * static_cast<double>(steps);
    const auto plan = fft_plan(state.grid.n);
    const std::size_t n = state.grid.n;
    const double inv_n = 1.0 / static_cast<double>(n);
    const auto levels = static_cast<std::ptrdiff_t>(state.level_count());
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t k = 0; k < levels; ++k) {
        const auto& block = blocks[static_cast<std::size_t>(k)];
        auto& psi = out.psi[static_cast<std::size_t>(k)];
        plan->forward(psi);
        for (std::size_t j = 0; j < n; ++j) {
            const double kappa = fft_wavenumber(j, n, state.grid.length());
            const double phase =
                -(block.kinetic * konst.hbar * kappa * kappa + block.v[0] / konst.hbar) * t_total;
            psi[j] *= std::polar(inv_n, phase);
        }
        plan->inverse_unscaled(psi);
    }
    out.t += t_total;
    return out;
}

}  // namespace clocksim

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "clocksim/blocks.hpp"
#include "clocksim/classical.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/observables.hpp"
#include "clocksim/propagate.hpp"
#include "clocksim/state.hpp"

using namespace clocksim;

namespace {

Constants dimless() { return Constants{10.0, 1.0, 1.0, 1.0}; }

InternalClockSpec two_level_clock(double gap) {
    InternalClockSpec clock;
    clock.levels = {0.0, gap};
    const double r = 1.0 / std::sqrt(2.0);
    clock.amplitudes = {cplx{r, 0.0}, cplx{r, 0.0}};
    return clock;
}

InternalClockSpec single_level_clock() {
    InternalClockSpec clock;
    clock.levels = {0.0};
    clock.amplitudes = {cplx{1.0, 0.0}};
    return clock;
}

bool bitwise_equal(const JointState& a, const JointState& b) {
    if (a.level_count() != b.level_count()) return false;
    for (std::size_t k = 0; k < a.level_count(); ++k) {
        for (std::size_t i = 0; i < a.psi[k].size(); ++i) {
            if (a.psi[k][i] != b.psi[k][i]) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("cancelling blocks evolve as a free particle") {
    const Constants k = dimless();
    Grid1D grid{-20.0, 20.0, 512};
    const auto clock = two_level_clock(0.1);
    const auto blocks = build_blocks(clock, PotentialSpec::CancellingLinear(), k, grid);
    const auto initial = product_state(grid, clock, gaussian_packet(grid, 0.0, 1.5, 0.4, k.hbar));

    const auto split = propagate(initial, blocks, k, 1e-2, 500);
    const auto exact = free_reference_evolution(initial, blocks, k, 1e-2, 500);
    CHECK(fidelity(exact, split) > 1.0 - 1e-12);
}

TEST_CASE("propagation composes exactly") {
    const Constants k = dimless();
    Grid1D grid{-10.0, 10.0, 128};
    const auto clock = two_level_clock(0.1);
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, grid);
    const auto initial = product_state(grid, clock, gaussian_packet(grid, 0.3, 0.8, 0.0, k.hbar));

    const auto whole = propagate(initial, blocks, k, 1e-3, 400);
    const auto half = propagate(propagate(initial, blocks, k, 1e-3, 200), blocks, k, 1e-3, 200);
    CHECK(bitwise_equal(whole, half));
}

TEST_CASE("harmonic ground state is stationary over one trap period") {
    const Constants k = dimless();
    Grid1D grid{-12.0, 12.0, 512};
    const auto clock = single_level_clock();
    const double omega = 1.0;
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, omega), k, grid);

    // analytic ground state of the gravity-shifted oscillator block
    const auto sagged = stationary_point(PotentialSpec::Harmonic(0.0, omega), 0.0, k);
    auto packet = oscillator_ground_state(grid, sagged.x, blocks[0].kinetic, k.m, omega, k.hbar);
    const auto initial = product_state(grid, clock, std::move(packet));

    const double trap_omega = omega * std::sqrt(2.0 * blocks[0].kinetic * k.m);
    const double period = 2.0 * 3.14159265358979323846 / trap_omega;
    const auto evolved = propagate(initial, blocks, k, period / 1000.0, 1000);

    double linf = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        linf = std::max(linf, std::fabs(std::norm(evolved.psi[0][i]) - std::norm(initial.psi[0][i])));
    }
    CHECK(linf < 1e-6);
}

TEST_CASE("unitarity and level populations over 1e4 steps") {
    const Constants k = dimless();
    // population conservation is asserted at a well-resolved grid; the rounding
    // bias of repeated phase rotations grows on coarse grids (few occupied modes)
    Grid1D grid{-24.0, 24.0, 2048};
    const auto clock = two_level_clock(0.1);
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, grid);
    const auto initial = product_state(grid, clock, gaussian_packet(grid, -0.6, 0.7, 0.0, k.hbar));

    const double p0_initial = level_population(initial, 0);
    const double p1_initial = level_population(initial, 1);
    const auto evolved = propagate(initial, blocks, k, 1e-3, 10000);

    CHECK(std::fabs(norm_squared(evolved) - norm_squared(initial)) < 1e-10);
    CHECK(std::fabs(level_population(evolved, 0) - p0_initial) < 1e-13);
    CHECK(std::fabs(level_population(evolved, 1) - p1_initial) < 1e-13);
}

TEST_CASE("Ehrenfest: d<x>/dt tracks 2 a_k <p>") {
    const Constants k = dimless();
    Grid1D grid{-12.0, 12.0, 256};
    const auto clock = single_level_clock();
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, grid);
    auto state = product_state(grid, clock, gaussian_packet(grid, 0.0, 0.7, 0.0, k.hbar));

    const double dt = 1e-3;
    std::vector<double> xs, ps;
    for (int i = 0; i < 200; ++i) {
        const auto ex = expectations(state, k.hbar);
        xs.push_back(ex.mean_x);
        ps.push_back(ex.mean_p);
        state = propagate(state, blocks, k, dt, 1);
    }
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double lhs = (xs[i + 1] - xs[i - 1]) / (2.0 * dt);
        const double rhs = 2.0 * blocks[0].kinetic * ps[i];
        CHECK(std::fabs(lhs - rhs) < 1e-5);
    }
}

TEST_CASE("finite-difference eigenvector is stationary under Crank-Nicolson") {
    const Constants k = dimless();
    Grid1D grid{-10.0, 10.0, 512};
    const auto clock = single_level_clock();
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, grid);
    const auto spectrum = eigensolve_fd(blocks[0], grid, k, 3);

    std::vector<cplx> packet(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) packet[i] = spectrum.wavefunctions[2][i];
    auto state = product_state(grid, clock, std::move(packet));
    const double x0 = expectations(state, k.hbar).mean_x;

    state = propagate_cn(state, blocks, k, 1e-3, 10000);
    CHECK(std::fabs(expectations(state, k.hbar).mean_x - x0) < 1e-8);
    CHECK(std::fabs(norm_squared(state) - 1.0) < 1e-10);
}

TEST_CASE("convergence: halving dx and dt gains at least a factor 3.5") {
    const Constants k = dimless();
    const auto clock = single_level_clock();
    const double t_end = 2.0;

    // reference on the fine grid with a much smaller step
    Grid1D fine{-12.0, 12.0, 1024};
    const auto blocks_fine = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, fine);
    const auto start_fine = product_state(fine, clock, gaussian_packet(fine, 1.0, 0.7, 0.0, k.hbar));
    const auto reference = propagate(start_fine, blocks_fine, k, t_end / 12800.0, 12800);

    // coarse run, spectrally interpolated onto the fine grid for comparison
    Grid1D coarse{-12.0, 12.0, 512};
    const auto blocks_coarse = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, coarse);
    const auto start_coarse =
        product_state(coarse, clock, gaussian_packet(coarse, 1.0, 0.7, 0.0, k.hbar));
    const auto run_coarse = propagate(start_coarse, blocks_coarse, k, t_end / 400.0, 400);
    const auto run_half = propagate(start_fine, blocks_fine, k, t_end / 800.0, 800);

    auto upsample = [&](const std::vector<cplx>& in) {
        std::vector<cplx> spec = in;
        fft_plan(coarse.n)->forward(spec);
        std::vector<cplx> padded(fine.n, cplx{0.0, 0.0});
        const std::size_t half = coarse.n / 2;
        for (std::size_t j = 0; j < half; ++j) padded[j] = spec[j];
        for (std::size_t j = half; j < coarse.n; ++j) padded[fine.n - coarse.n + j] = spec[j];
        fft_plan(fine.n)->inverse(padded);
        const double scale = static_cast<double>(fine.n) / static_cast<double>(coarse.n);
        for (auto& z : padded) z *= scale;
        return padded;
    };

    auto l2_error = [&](const std::vector<cplx>& a, const std::vector<cplx>& b, double dx) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
        return std::sqrt(s * dx);
    };

    const double err_coarse = l2_error(upsample(run_coarse.psi[0]), reference.psi[0], fine.dx());
    const double err_half = l2_error(run_half.psi[0], reference.psi[0], fine.dx());
    CHECK(err_coarse / err_half >= 3.5);
}

TEST_CASE("propagation guards") {
    const Constants k = dimless();
    Grid1D grid{-10.0, 10.0, 128};
    const auto clock = two_level_clock(0.1);
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, grid);
    const auto state = product_state(grid, clock, gaussian_packet(grid, 0.0, 0.8, 0.0, k.hbar));

    SUBCASE("grid mismatch") {
        Grid1D other{-10.0, 10.0, 256};
        const auto blocks_other = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, other);
        CHECK_THROWS_AS(propagate(state, blocks_other, k, 1e-3, 1), GridMismatch);
    }
    SUBCASE("hard floor blocks are rejected by the spectral path") {
        const auto floor_blocks = build_blocks(clock, PotentialSpec::HardFloor(0.0), k, grid);
        CHECK_THROWS_AS(propagate(state, floor_blocks, k, 1e-3, 1), InvalidInput);
    }
    SUBCASE("free reference refuses varying potentials") {
        CHECK_THROWS_AS(free_reference_evolution(state, blocks, k, 1e-3, 1), NotFree);
    }
    SUBCASE("zero-time reference request is the identity") {
        const auto cl_blocks = build_blocks(clock, PotentialSpec::CancellingLinear(), k, grid);
        const auto same = free_reference_evolution(state, cl_blocks, k, 1e-3, 0);
        CHECK(bitwise_equal(same, state));
    }
}

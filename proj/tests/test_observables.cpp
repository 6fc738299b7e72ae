#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "clocksim/blocks.hpp"
#include "clocksim/classical.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/observables.hpp"
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

JointState random_state(const Grid1D& grid, std::size_t levels, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    JointState state;
    state.grid = grid;
    state.psi.resize(levels);
    for (auto& level : state.psi) {
        level.resize(grid.n);
        for (auto& z : level) z = cplx{dist(rng), dist(rng)};
    }
    normalize(state);
    return state;
}

}  // namespace

TEST_CASE("reduced density of a product state") {
    const Constants k = dimless();
    Grid1D grid{-10.0, 10.0, 128};
    const auto state = product_state(grid, two_level_clock(0.1),
                                     gaussian_packet(grid, 0.0, 1.0, 0.0, k.hbar));
    const auto rho = reduced_internal(state);
    CHECK(std::abs(rho.at(0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(visibility(rho, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disjoint packets dephase completely") {
    const Constants k = dimless();
    Grid1D grid{-20.0, 20.0, 256};
    InternalClockSpec clock = two_level_clock(0.1);
    auto state = per_level_state(grid, clock,
                                 {gaussian_packet(grid, -8.0, 0.5, 0.0, k.hbar),
                                  gaussian_packet(grid, 8.0, 0.5, 0.0, k.hbar)});
    const auto rho = reduced_internal(state);
    CHECK(std::abs(rho.at(0, 1)) < 1e-12);
    CHECK(purity(rho) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(visibility(rho, 0, 1) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("purity equals (1 + |<low|high>|^2)/2 for two-branch states") {
    const Constants k = dimless();
    Grid1D grid{-20.0, 20.0, 256};
    InternalClockSpec clock = two_level_clock(0.1);
    for (double separation : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        auto low = gaussian_packet(grid, -separation / 2.0, 1.0, 0.0, k.hbar);
        auto high = gaussian_packet(grid, separation / 2.0, 1.0, 0.0, k.hbar);
        cplx overlap = 0.0;
        for (std::size_t i = 0; i < grid.n; ++i) overlap += low[i] * std::conj(high[i]);
        overlap *= grid.dx();
        const auto state = per_level_state(grid, clock, {std::move(low), std::move(high)});
        const auto rho = reduced_internal(state);
        CHECK(purity(rho) ==
              doctest::Approx(0.5 * (1.0 + std::norm(overlap))).epsilon(1e-10));
    }
}

TEST_CASE("density matrix is Hermitian, unit trace, positive") {
    Grid1D grid{-5.0, 5.0, 64};
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (unsigned trial = 0; trial < 20; ++trial) {
        const auto state = random_state(grid, 3, 100 + trial);
        const auto rho = reduced_internal(state);
        double trace = 0.0;
        for (std::size_t k = 0; k < rho.dim; ++k) {
            trace += rho.at(k, k).real();
            for (std::size_t l = 0; l < rho.dim; ++l) {
                CHECK(std::abs(rho.at(k, l) - std::conj(rho.at(l, k))) < 1e-12);
            }
        }
        CHECK(std::fabs(trace - 1.0) < 1e-10);
        // positive semidefinite: probe with random internal vectors
        for (int probe = 0; probe < 16; ++probe) {
            std::vector<cplx> u(rho.dim);
            for (auto& z : u) z = cplx{dist(rng), dist(rng)};
            cplx quad = 0.0;
            for (std::size_t k = 0; k < rho.dim; ++k)
                for (std::size_t l = 0; l < rho.dim; ++l)
                    quad += std::conj(u[k]) * rho.at(k, l) * u[l];
            CHECK(quad.real() > -1e-10);
        }
    }
}

TEST_CASE("visibility guards") {
    const Constants k = dimless();
    Grid1D grid{-10.0, 10.0, 64};
    const auto rho = reduced_internal(
        product_state(grid, two_level_clock(0.1), gaussian_packet(grid, 0.0, 1.0, 0.0, k.hbar)));
    CHECK_THROWS_AS(visibility(rho, 0, 2), IndexOutOfRange);
    CHECK_THROWS_AS(visibility(rho, 1, 1), IndexOutOfRange);
}

TEST_CASE("analytic visibility closed form") {
    const Constants k = dimless();
    CHECK(analytic_visibility(1.0, 0.0, 123.0, k) == 1.0);
    const double t_zero = 50.0 * 3.14159265358979323846;
    CHECK(std::fabs(analytic_visibility(1.0, 2.0, t_zero, k)) < 1e-12);
    CHECK(analytic_visibility(1.0, 2.0, 2.0 * t_zero, k) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("redshift from classical trapped clock phases") {
    const Constants k = dimless();
    const double e0 = 0.1, dt = 1e-3;
    const std::size_t steps = 20000;

    SUBCASE("harmonic traps separated by 5 give g*dx/c^2") {
        auto run = [&](double center) {
            const auto spec = PotentialSpec::Harmonic(center, 1.0);
            const auto sp = stationary_point(spec, e0, k);
            return integrate({sp.x, 0.0, 0.0, 0.0}, e0, spec, k, dt, steps, steps);
        };
        const auto low = run(0.0), high = run(5.0);
        const double t = low.samples.back().t;
        const double shift =
            redshift_from_phases(low.samples.back().phi, high.samples.back().phi, e0, t, k);
        CHECK(std::fabs(shift - 0.05) < 1e-9);
    }

    SUBCASE("identical heights give zero") {
        const auto spec = PotentialSpec::Harmonic(0.0, 1.0);
        const auto sp = stationary_point(spec, e0, k);
        const auto a = integrate({sp.x, 0.0, 0.0, 0.0}, e0, spec, k, dt, steps, steps);
        const double t = a.samples.back().t;
        CHECK(redshift_from_phases(a.samples.back().phi, a.samples.back().phi, e0, t, k) == 0.0);
    }

    SUBCASE("cancelling potential ticks at equal rates at any two heights") {
        auto run = [&](double x0) {
            return integrate({x0, 0.0, 0.0, 0.0}, e0, PotentialSpec::CancellingLinear(), k, dt,
                             steps, steps);
        };
        const auto low = run(-3.0), high = run(11.0);
        const double t = low.samples.back().t;
        const double shift =
            redshift_from_phases(low.samples.back().phi, high.samples.back().phi, e0, t, k);
        CHECK(std::fabs(shift) < 1e-12);
    }

    SUBCASE("guards") {
        CHECK_THROWS_AS(redshift_from_phases(0.0, 1.0, 0.1, 0.0, k), InvalidInput);
        CHECK_THROWS_AS(redshift_from_phases(0.0, 1.0, 0.0, 1.0, k), InvalidInput);
    }
}

TEST_CASE("analytic redshift values") {
    Constants si;
    si.c = 2.99792458e8;
    si.g = 9.81;
    si.hbar = 1.054571817e-34;
    si.m = 1.0;
    CHECK(analytic_redshift(1.0, si) == doctest::Approx(1.0915e-16).epsilon(1e-4));
    CHECK(analytic_redshift(0.0, si) == 0.0);
    CHECK(analytic_redshift(5.0, dimless()) == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("expectations") {
    const Constants k = dimless();

    SUBCASE("symmetric packet is centered") {
        Grid1D grid{-12.0, 12.0, 256};
        const auto state = product_state(grid, two_level_clock(0.1),
                                         gaussian_packet(grid, 0.0, 1.0, 0.0, k.hbar));
        const auto ex = expectations(state, k.hbar);
        CHECK(std::fabs(ex.mean_x) < 1e-12);
        CHECK(ex.norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ex.var_x == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(ex.level_populations[0] == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("bouncer ground state obeys the virial relation <x> = 2E/(3mg)") {
        Grid1D grid{-2.0, 30.0, 2048};
        InternalClockSpec clock;
        clock.levels = {0.0};
        clock.amplitudes = {cplx{1.0, 0.0}};
        const auto blocks = build_blocks(clock, PotentialSpec::HardFloor(0.0), k, grid);
        const auto spectrum = eigensolve_fd(blocks[0], grid, k, 1);
        std::vector<cplx> packet(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) packet[i] = spectrum.wavefunctions[0][i];
        const auto state = product_state(grid, clock, std::move(packet));
        const auto ex = expectations(state, k.hbar);
        const double expected = 2.0 * spectrum.energies[0] / (3.0 * k.m * k.g);
        CHECK(std::fabs(ex.mean_x - expected) < 1e-4);
        CHECK(ex.mean_x == doctest::Approx(1.2372).epsilon(2e-4));
    }

    SUBCASE("boosted packet carries its momentum") {
        Grid1D grid{-20.0, 20.0, 512};
        const auto state = product_state(grid, two_level_clock(0.1),
                                         gaussian_packet(grid, 0.0, 1.5, 0.7, k.hbar));
        const auto ex = expectations(state, k.hbar);
        CHECK(std::fabs(ex.mean_p - 0.7) < 1e-8);
    }
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "clocksim/blocks.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/parallel.hpp"
#include "clocksim/propagate.hpp"
#include "clocksim/state.hpp"

using namespace clocksim;

namespace {

InternalClockSpec many_level_clock(std::size_t count) {
    InternalClockSpec clock;
    const double r = 1.0 / std::sqrt(static_cast<double>(count));
    for (std::size_t k = 0; k < count; ++k) {
        clock.levels.push_back(0.05 * static_cast<double>(k));
        clock.amplitudes.push_back(cplx{r, 0.0});
    }
    return clock;
}

bool bitwise_equal(const JointState& a, const JointState& b) {
    for (std::size_t k = 0; k < a.level_count(); ++k) {
        for (std::size_t i = 0; i < a.psi[k].size(); ++i) {
            if (a.psi[k][i] != b.psi[k][i]) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("parallel split-operator kernel matches the serial reference bitwise") {
    const Constants k{10.0, 1.0, 1.0, 1.0};
    Grid1D grid{-12.0, 12.0, 256};
    const auto clock = many_level_clock(5);
    const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), k, grid);
    const auto initial = product_state(grid, clock, gaussian_packet(grid, 0.4, 0.8, 0.0, k.hbar));

    const auto serial = propagate(initial, blocks, k, 1e-3, 500, Exec::serial);
    const auto parallel = propagate(initial, blocks, k, 1e-3, 500, Exec::parallel);
    CHECK(bitwise_equal(serial, parallel));
}

TEST_CASE("parallel Crank-Nicolson kernel matches the serial reference bitwise") {
    const Constants k{10.0, 1.0, 1.0, 1.0};
    Grid1D grid{-2.0, 20.0, 512};
    const auto clock = many_level_clock(4);
    const auto blocks = build_blocks(clock, PotentialSpec::HardFloor(0.0), k, grid);

    JointState state;
    state.grid = grid;
    state.psi.resize(clock.level_count());
    for (std::size_t lev = 0; lev < clock.level_count(); ++lev) {
        state.psi[lev].assign(grid.n, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < grid.n; ++i) {
            const double x = grid.x(i);
            if (x > 0.0) state.psi[lev][i] = x * std::exp(-x);
        }
    }
    normalize(state);

    const auto serial = propagate_cn(state, blocks, k, 1e-3, 300, Exec::serial);
    const auto parallel = propagate_cn(state, blocks, k, 1e-3, 300, Exec::parallel);
    CHECK(bitwise_equal(serial, parallel));
}

TEST_CASE("parallel eigensolver matches the serial reference bitwise") {
    const Constants k{10.0, 1.0, 1.0, 1.0};
    Grid1D grid{-2.0, 30.0, 1024};
    InternalClockSpec clock;
    clock.levels = {0.0};
    clock.amplitudes = {cplx{1.0, 0.0}};
    const auto blocks = build_blocks(clock, PotentialSpec::HardFloor(0.0), k, grid);

    const auto serial = eigensolve_fd(blocks[0], grid, k, 12, true, Exec::serial);
    const auto parallel = eigensolve_fd(blocks[0], grid, k, 12, true, Exec::parallel);
    REQUIRE(serial.energies.size() == parallel.energies.size());
    for (std::size_t j = 0; j < serial.energies.size(); ++j) {
        CHECK(serial.energies[j] == parallel.energies[j]);
        for (std::size_t i = 0; i < grid.n; ++i)
            CHECK(serial.wavefunctions[j][i] == parallel.wavefunctions[j][i]);
    }
}

TEST_CASE("default policy reports the build mode") {
#ifdef _OPENMP
    CHECK(default_exec() == Exec::parallel);
    CHECK(max_threads() >= 1);
#else
    CHECK(default_exec() == Exec::serial);
    CHECK(max_threads() == 1);
#endif
}

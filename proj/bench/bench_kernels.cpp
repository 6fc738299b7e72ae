// Wall-clock comparison of the serial reference kernels against the OpenMP
// paths, plus a bitwise agreement check on each pair.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "clocksim/blocks.hpp"
#include "clocksim/classical.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/parallel.hpp"
#include "clocksim/propagate.hpp"
#include "clocksim/state.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace clocksim;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds(t0, std::chrono::steady_clock::now());
}

bool states_equal(const JointState& a, const JointState& b) {
    for (std::size_t k = 0; k < a.level_count(); ++k)
        for (std::size_t i = 0; i < a.psi[k].size(); ++i)
            if (a.psi[k][i] != b.psi[k][i]) return false;
    return true;
}

InternalClockSpec clock_with_levels(std::size_t count) {
    InternalClockSpec clock;
    const double r = 1.0 / std::sqrt(static_cast<double>(count));
    for (std::size_t k = 0; k < count; ++k) {
        clock.levels.push_back(0.02 * static_cast<double>(k));
        clock.amplitudes.push_back(cplx{r, 0.0});
    }
    return clock;
}

void report(const char* name, double t_serial, double t_parallel, bool identical) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n", name,
                t_serial, t_parallel, t_serial / t_parallel,
                identical ? "bitwise-identical" : "DIFFER");
}

}  // namespace

int main() {
    const Constants konst{10.0, 1.0, 1.0, 1.0};
    std::printf("threads available: %d\n", max_threads());

    {
        const std::size_t levels = 8;
        Grid1D grid{-20.0, 20.0, 4096};
        const auto clock = clock_with_levels(levels);
        const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), konst, grid);
        const auto initial =
            product_state(grid, clock, gaussian_packet(grid, 0.5, 0.8, 0.0, konst.hbar));
        JointState out_serial, out_parallel;
        const double ts = timed([&] { out_serial = propagate(initial, blocks, konst, 1e-3, 2000, Exec::serial); });
        const double tp = timed([&] { out_parallel = propagate(initial, blocks, konst, 1e-3, 2000, Exec::parallel); });
        report("split-operator (8 levels)", ts, tp, states_equal(out_serial, out_parallel));
    }

    {
        const std::size_t levels = 8;
        Grid1D grid{-2.0, 40.0, 8192};
        const auto clock = clock_with_levels(levels);
        const auto blocks = build_blocks(clock, PotentialSpec::HardFloor(0.0), konst, grid);
        JointState state;
        state.grid = grid;
        state.psi.resize(levels);
        for (auto& psi : state.psi) {
            psi.assign(grid.n, cplx{0.0, 0.0});
            for (std::size_t i = 0; i < grid.n; ++i) {
                const double x = grid.x(i);
                if (x > 0.0) psi[i] = x * std::exp(-0.8 * x);
            }
        }
        normalize(state);
        JointState out_serial, out_parallel;
        const double ts = timed([&] { out_serial = propagate_cn(state, blocks, konst, 1e-3, 4000, Exec::serial); });
        const double tp = timed([&] { out_parallel = propagate_cn(state, blocks, konst, 1e-3, 4000, Exec::parallel); });
        report("crank-nicolson (8 levels)", ts, tp, states_equal(out_serial, out_parallel));
    }

    {
        Grid1D grid{-2.0, 60.0, 8192};
        InternalClockSpec single = clock_with_levels(1);
        const auto blocks = build_blocks(single, PotentialSpec::HardFloor(0.0), konst, grid);
        Spectrum s_serial, s_parallel;
        const double ts = timed([&] { s_serial = eigensolve_fd(blocks[0], grid, konst, 48, true, Exec::serial); });
        const double tp = timed([&] { s_parallel = eigensolve_fd(blocks[0], grid, konst, 48, true, Exec::parallel); });
        bool identical = s_serial.energies == s_parallel.energies;
        for (std::size_t j = 0; identical && j < s_serial.wavefunctions.size(); ++j)
            identical = s_serial.wavefunctions[j] == s_parallel.wavefunctions[j];
        report("eigensolve (48 states)", ts, tp, identical);
    }

    {
        // independent trajectories, the scenario-level parallelism
        const auto spec = PotentialSpec::Harmonic(0.0, 1.0);
        const int count = 64;
        std::vector<Trajectory> serial(count), parallel(count);
        auto run_batch = [&](std::vector<Trajectory>& sink, bool par) {
#pragma omp parallel for schedule(static) if (par)
            for (int i = 0; i < count; ++i) {
                const double x0 = -2.0 + 4.0 * static_cast<double>(i) / count;
                sink[static_cast<std::size_t>(i)] =
                    integrate({x0, 0.0, 0.0, 0.0}, 0.05, spec, konst, 1e-4, 200000, 200000);
            }
        };
        const double ts = timed([&] { run_batch(serial, false); });
        const double tp = timed([&] { run_batch(parallel, true); });
        bool identical = true;
        for (int i = 0; i < count; ++i) {
            const auto& a = serial[static_cast<std::size_t>(i)].samples.back();
            const auto& b = parallel[static_cast<std::size_t>(i)].samples.back();
            identical = identical && a.x == b.x && a.p == b.p && a.phi == b.phi;
        }
        report("classical batch (64 runs)", ts, tp, identical);
    }

    return 0;
}

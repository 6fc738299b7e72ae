#include "clocksim/selftest.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "clocksim/blocks.hpp"
#include "clocksim/classical.hpp"
#include "clocksim/csv.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/observables.hpp"
#include "clocksim/propagate.hpp"
#include "clocksim/state.hpp"

namespace clocksim {

namespace {

struct Reporter {
    std::ostream& out;
    bool all_ok = true;
    void check(const std::string& name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << '\n';
        all_ok = all_ok && ok;
    }
};

InternalClockSpec test_clock() {
    InternalClockSpec clock;
    clock.levels = {0.0, 0.1};
    const double r = 1.0 / std::sqrt(2.0);
    clock.amplitudes = {cplx{r, 0.0}, cplx{r, 0.0}};
    return clock;
}

}  // namespace

bool run_selftest(std::ostream& out) {
    Reporter rep{out};
    const Constants konst{10.0, 1.0, 1.0, 1.0};
    const auto clock = test_clock();

    // cancellation identity: V_k is bitwise E_k for every sampled point
    {
        Grid1D grid{-9.0, 9.0, 256};
        const auto blocks = build_blocks(clock, PotentialSpec::CancellingLinear(), konst, grid);
        bool ok = true;
        for (const auto& b : blocks) {
            for (double v : b.v) ok = ok && (v == b.energy);
        }
        rep.check("cancellation_identity", ok);
    }

    // unitarity + level populations under split-operator evolution
    {
        Grid1D grid{-12.0, 12.0, 256};
        const auto blocks = build_blocks(clock, PotentialSpec::Harmonic(0.0, 1.0), konst, grid);
        const auto initial =
            product_state(grid, clock, gaussian_packet(grid, -0.5, 0.7, 0.0, konst.hbar));
        const auto evolved = propagate(initial, blocks, konst, 1e-3, 2000);
        rep.check("unitarity", std::fabs(norm_squared(evolved) - norm_squared(initial)) < 1e-10);
        rep.check("level_population_conservation",
                  std::fabs(level_population(evolved, 0) - level_population(initial, 0)) < 1e-13 &&
                      std::fabs(level_population(evolved, 1) - level_population(initial, 1)) <
                          1e-13);

        const auto whole = propagate(initial, blocks, konst, 1e-3, 200);
        const auto split =
            propagate(propagate(initial, blocks, konst, 1e-3, 100), blocks, konst, 1e-3, 100);
        bool identical = true;
        for (std::size_t k = 0; k < whole.level_count(); ++k)
            for (std::size_t i = 0; i < grid.n; ++i)
                identical = identical && (whole.psi[k][i] == split.psi[k][i]);
        rep.check("composition_exact", identical);
    }

    // cancelling potential evolves as a free particle
    {
        Grid1D grid{-15.0, 15.0, 256};
        const auto blocks = build_blocks(clock, PotentialSpec::CancellingLinear(), konst, grid);
        const auto initial =
            product_state(grid, clock, gaussian_packet(grid, 0.0, 1.2, 0.3, konst.hbar));
        const auto split = propagate(initial, blocks, konst, 5e-3, 400);
        const auto exact = free_reference_evolution(initial, blocks, konst, 5e-3, 400);
        rep.check("free_reference_fidelity", fidelity(exact, split) > 1.0 - 1e-12);
    }

    // leapfrog reversibility
    {
        ClassicalState s{0.7, -0.3, 0.0, 0.0};
        const ClassicalState start = s;
        const auto spec = PotentialSpec::Harmonic(0.0, 1.0);
        for (int i = 0; i < 2000; ++i) s = hamilton_step(s, 0.1, spec, konst, 1e-3);
        s.p = -s.p;
        for (int i = 0; i < 2000; ++i) s = hamilton_step(s, 0.1, spec, konst, 1e-3);
        rep.check("leapfrog_reversibility",
                  std::fabs(s.x - start.x) < 1e-9 && std::fabs(-s.p - start.p) < 1e-9);
    }

    // eigenvector orthonormality on a small harmonic problem
    {
        Constants flat = konst;
        flat.g = 0.0;
        Grid1D grid{-8.0, 8.0, 256};
        InternalClockSpec single;
        single.levels = {0.0};
        single.amplitudes = {cplx{1.0, 0.0}};
        const auto blocks = build_blocks(single, PotentialSpec::Harmonic(0.0, 1.0), flat, grid);
        const auto spectrum = eigensolve_fd(blocks[0], grid, flat, 4);
        bool ok = true;
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = a; b < 4; ++b) {
                double dot = 0.0;
                for (std::size_t i = 0; i < grid.n; ++i)
                    dot += spectrum.wavefunctions[a][i] * spectrum.wavefunctions[b][i];
                dot *= grid.dx();
                ok = ok && std::fabs(dot - (a == b ? 1.0 : 0.0)) < 1e-8;
            }
        }
        rep.check("eigenvector_orthonormality", ok);
    }

    // 17-digit round trip
    {
        bool ok = true;
        for (double v : {0.1, -3.0e-17, 1.0915e-16, 6.283185307179586, 1e300, -0.0}) {
            const std::string s = format_real(v);
            ok = ok && (std::strtod(s.c_str(), nullptr) == v);
        }
        rep.check("csv_real_round_trip", ok);
    }

    return rep.all_ok;
}

}  // namespace clocksim

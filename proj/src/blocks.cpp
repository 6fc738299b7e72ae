#include "clocksim/blocks.hpp"

#include <cmath>
#include <limits>

namespace clocksim {

double kinetic_coefficient(double m, double energy, double c) {
    if (!(m > 0.0) || !(c > 0.0)) throw InvalidInput("kinetic_coefficient: need m > 0 and c > 0");
    if (!(std::fabs(energy) < 0.1 * m * c * c))
        throw ApproximationBreach("kinetic_coefficient: |E_k| exceeds 0.1*m*c^2");
    return 1.0 / (2.0 * m) - energy / (2.0 * m * m * c * c);
}

std::vector<BlockHamiltonian> build_blocks(const InternalClockSpec& clock,
                                           const PotentialSpec& spec,
                                           const Constants& konst,
                                           const Grid1D& grid) {
    konst.validate();
    grid.validate();
    spec.validate();
    clock.validate(konst);
    if (spec.kind == PotentialKind::hard_floor) {
        if (!(spec.floor > grid.x_min && spec.floor < grid.x_max))
            throw InvalidInput("potential: hard floor must lie inside the grid domain");
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<BlockHamiltonian> blocks;
    blocks.reserve(clock.level_count());
    for (std::size_t k = 0; k < clock.level_count(); ++k) {
        BlockHamiltonian block;
        block.level = k;
        block.energy = clock.levels[k];
        block.kinetic = kinetic_coefficient(konst.m, block.energy, konst.c);
        block.v.resize(grid.n);
        if (spec.kind == PotentialKind::hard_floor) {
            // Nodes at or below the floor carry the Dirichlet condition; the
            // first interior node sits strictly above it.
            std::size_t first = 0;
            while (first < grid.n && grid.x(first) <= spec.floor) ++first;
            block.first_interior = first;
            for (std::size_t i = 0; i < grid.n; ++i) {
                block.v[i] = i < first ? inf
                                       : potential_profile(spec, konst, block.energy, grid.x(i));
            }
        } else {
            for (std::size_t i = 0; i < grid.n; ++i) {
                block.v[i] = potential_profile(spec, konst, block.energy, grid.x(i));
            }
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace clocksim

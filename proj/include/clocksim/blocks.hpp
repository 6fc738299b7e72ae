#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clocksim/clock.hpp"
#include "clocksim/constants.hpp"
#include "clocksim/grid.hpp"
#include "clocksim/potential.hpp"

namespace clocksim {

/// One internal level's block of the Hamiltonian:
///   H_k = a_k p^2 + V_k(x),  a_k = 1/(2m) - E_k/(2 m^2 c^2).
/// The blocks are mutually independent; there is no cross-level coupling.
struct BlockHamiltonian {
    std::size_t level = 0;
    double energy = 0.0;       ///< E_k
    double kinetic = 0.0;      ///< a_k, strictly positive under the low-energy guard
    std::vector<double> v;     ///< V_k sampled on the grid; +inf marks wall nodes
    std::optional<std::size_t> first_interior;  ///< hard floor: first evolvable node

    /// Index range [begin, end) of nodes carrying amplitude.
    std::size_t interior_begin() const { return first_interior.value_or(0); }
};

/// 1/(2m) - E_k/(2 m^2 c^2). Throws ApproximationBreach when |E_k| >= 0.1*m*c^2.
double kinetic_coefficient(double m, double energy, double c);

/// Assembles one block per internal level on the given grid.
std::vector<BlockHamiltonian> build_blocks(const InternalClockSpec& clock,
                                           const PotentialSpec& spec,
                                           const Constants& konst,
                                           const Grid1D& grid);

}  // namespace clocksim

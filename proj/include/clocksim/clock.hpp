#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "clocksim/constants.hpp"
#include "clocksim/errors.hpp"

namespace clocksim {

using cplx = std::complex<double>;

/// Internal clock: eigenvalues E_k of the rest-frame Hamiltonian together
/// with the initial internal amplitudes c_k.
struct InternalClockSpec {
    std::vector<double> levels;  ///< strictly increasing, rest-frame energies
    std::vector<cplx> amplitudes;  ///< same length, sum |c_k|^2 = 1

    std::size_t level_count() const { return levels.size(); }

    /// Checks normalization, ordering and the low-energy guard |E_k| < 0.1*m*c^2.
    void validate(const Constants& konst) const {
        if (levels.empty()) throw InvalidInput("clock: at least one internal level required");
        if (levels.size() != amplitudes.size())
            throw InvalidInput("clock: amplitude count must match level count");
        for (std::size_t k = 1; k < levels.size(); ++k) {
            if (!(levels[k] > levels[k - 1]))
                throw InvalidInput("clock: levels must be strictly increasing");
        }
        double norm2 = 0.0;
        for (const auto& a : amplitudes) norm2 += std::norm(a);
        if (std::fabs(norm2 - 1.0) > 1e-12)
            throw InvalidInput("clock: internal amplitudes must be normalized to 1 within 1e-12");
        const double guard = 0.1 * konst.mc2();
        for (double e : levels) {
            if (!(std::fabs(e) < guard))
                throw ApproximationBreach("clock: |E_k| must stay below 0.1*m*c^2");
        }
    }

    bool operator==(const InternalClockSpec&) const = default;
};

}  // namespace clocksim

#include "clocksim/observables.hpp"

#include <cmath>

#include "clocksim/errors.hpp"
#include "clocksim/fft.hpp"

namespace clocksim {

InternalDensity reduced_internal(const JointState& state) {
    const std::size_t d = state.level_count();
    InternalDensity rho;
    rho.dim = d;
    rho.rho.assign(d * d, cplx{0.0, 0.0});
    const double dx = state.grid.dx();
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = k; l < d; ++l) {
            cplx acc = 0.0;
            for (std::size_t i = 0; i < state.grid.n; ++i) {
                acc += state.psi[k][i] * std::conj(state.psi[l][i]);
            }
            acc *= dx;
            if (l == k) acc = cplx{acc.real(), 0.0};
            rho.rho[k * d + l] = acc;
            rho.rho[l * d + k] = std::conj(acc);
        }
    }
    return rho;
}

double purity(const InternalDensity& rho) {
    double s = 0.0;
    for (const cplx& z : rho.rho) s += std::norm(z);
    return s;
}

double visibility(const InternalDensity& rho, std::size_t k, std::size_t l) {
    if (k >= rho.dim || l >= rho.dim) throw IndexOutOfRange("visibility: level index out of range");
    if (k == l) throw IndexOutOfRange("visibility: needs two distinct levels");
    const double raw = 2.0 * std::abs(rho.at(k, l));
    const double pk = rho.at(k, k).real();
    const double pl = rho.at(l, l).real();
    if (std::fabs(pk - pl) <= 1e-9) return std::min(raw, 1.0);
    return raw;
}

double analytic_visibility(double d_energy, double dx, double t, const Constants& konst) {
    const double arg = konst.g * dx * d_energy * t / (2.0 * konst.hbar * konst.c * konst.c);
    return std::fabs(std::cos(arg));
}

double redshift_from_phases(double phi_low, double phi_high, double energy, double t,
                            const Constants& konst) {
    if (!(t > 0.0)) throw InvalidInput("redshift_from_phases: t must be positive");
    if (energy == 0.0) throw InvalidInput("redshift_from_phases: E0 must be nonzero");
    return (phi_high - phi_low) * konst.hbar / (energy * t);
}

double analytic_redshift(double height, const Constants& konst) {
    return konst.g * height / (konst.c * konst.c);
}

Expectations expectations(const JointState& state, double hbar) {
    Expectations out;
    const std::size_t d = state.level_count();
    const std::size_t n = state.grid.n;
    const double dx = state.grid.dx();
    out.level_populations.resize(d);

    double mean_x = 0.0, mean_x2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        double pop = 0.0, mx = 0.0, mx2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = std::norm(state.psi[k][i]);
            const double x = state.grid.x(i);
            pop += w;
            mx += w * x;
            mx2 += w * x * x;
        }
        out.level_populations[k] = pop * dx;
        mean_x += mx * dx;
        mean_x2 += mx2 * dx;
    }
    out.norm = 0.0;
    for (double p : out.level_populations) out.norm += p;
    mean_x /= out.norm;
    mean_x2 /= out.norm;
    out.mean_x = mean_x;
    out.var_x = mean_x2 - mean_x * mean_x;

    // <p> from the spectral representation; Parseval carries dx -> dx/n.
    const auto plan = fft_plan(n);
    std::vector<cplx> work(n);
    double mean_p = 0.0;
    const double hbar_scale = hbar * dx / static_cast<double>(n);
    for (std::size_t k = 0; k < d; ++k) {
        work = state.psi[k];
        plan->forward(work);
        double mp = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            mp += fft_wavenumber(j, n, state.grid.length()) * std::norm(work[j]);
        }
        mean_p += mp * hbar_scale;
    }
    out.mean_p = mean_p / out.norm;
    return out;
}

}  // namespace clocksim

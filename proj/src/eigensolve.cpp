#include "clocksim/eigensolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "clocksim/errors.hpp"

namespace clocksim {

namespace {

/// Number of eigenvalues of the tridiagonal (diag, const off) below lambda,
/// by the sign count of the LDL^T pivots (Sturm sequence).
std::size_t sturm_count_below(const std::vector<double>& diag, double off2, double lambda,
                              double pivmin) {
    std::size_t count = 0;
    double q = diag[0] - lambda;
    if (std::fabs(q) < pivmin) q = q < 0.0 ? -pivmin : pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        q = diag[i] - lambda - off2 / q;
        if (std::fabs(q) < pivmin) q = q < 0.0 ? -pivmin : pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

/// Bisects for the eigenvalue with the given 0-based index.
double bisect_eigenvalue(const std::vector<double>& diag, double off, double lo, double hi,
                         std::size_t index, double pivmin) {
    const double off2 = off * off;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval collapsed to adjacent doubles
        if (sturm_count_below(diag, off2, mid, pivmin) > index) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Solves (T - lambda I) x = b by LU with partial pivoting; T tridiagonal
/// with constant off-diagonal. Near-singularity is the working regime.
void shifted_tridiag_solve(const std::vector<double>& diag, double off, double lambda,
                           std::vector<double>& x) {
    const std::size_t m = diag.size();
    std::vector<double> dl(m, off), d(m), du(m, off), du2(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) d[i] = diag[i] - lambda;
    std::vector<int> swapped(m, 0);

    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (std::fabs(d[i]) >= std::fabs(dl[i + 1])) {
            const double safe = d[i] != 0.0 ? d[i] : std::numeric_limits<double>::min();
            const double mult = dl[i + 1] / safe;
            dl[i + 1] = mult;
            d[i + 1] -= mult * du[i];
        } else {
            const double mult = d[i] / dl[i + 1];
            d[i] = dl[i + 1];
            dl[i + 1] = mult;
            const double tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - mult * d[i + 1];
            if (i + 2 < m) {
                du2[i] = du[i + 1];
                du[i + 1] = -mult * du[i + 1];
            }
            swapped[i] = 1;
        }
    }

    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!swapped[i]) {
            x[i + 1] -= dl[i + 1] * x[i];
        } else {
            const double tmp = x[i];
            x[i] = x[i + 1];
            x[i + 1] = tmp - dl[i + 1] * x[i];
        }
    }
    for (std::size_t i = m; i-- > 0;) {
        double v = x[i];
        if (i + 1 < m) v -= du[i] * x[i + 1];
        if (i + 2 < m) v -= du2[i] * x[i + 2];
        const double piv = d[i] != 0.0 ? d[i] : std::numeric_limits<double>::min();
        x[i] = v / piv;
    }
}

void normalize_l2(std::vector<double>& v) {
    double s = 0.0;
    for (double a : v) s += a * a;
    const double inv = 1.0 / std::sqrt(s);
    for (double& a : v) a *= inv;
}

/// Inverse iteration for one eigenvector, orthogonalized against earlier
/// vectors of a near-degenerate cluster.
std::vector<double> inverse_iteration(const std::vector<double>& diag, double off, double lambda,
                                      const std::vector<const std::vector<double>*>& cluster) {
    const std::size_t m = diag.size();
    std::vector<double> v(m, 1.0);
    normalize_l2(v);
    for (int iter = 0; iter < 4; ++iter) {
        shifted_tridiag_solve(diag, off, lambda, v);
        for (const auto* prev : cluster) {
            double dot = 0.0;
            for (std::size_t i = 0; i < m; ++i) dot += v[i] * (*prev)[i];
            for (std::size_t i = 0; i < m; ++i) v[i] -= dot * (*prev)[i];
        }
        normalize_l2(v);
        // residual check: ||(T - lambda) v||
        double res = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double t = (diag[i] - lambda) * v[i];
            if (i > 0) t += off * v[i - 1];
            if (i + 1 < m) t += off * v[i + 1];
            res += t * t;
        }
        if (std::sqrt(res) < 1e-11 * std::max(1.0, std::fabs(lambda))) break;
    }
    return v;
}

}  // namespace

Spectrum eigensolve_fd(const BlockHamiltonian& block, const Grid1D& grid, const Constants& konst,
                       std::size_t n_max, bool want_vectors, Exec exec) {
    if (n_max < 1) throw InvalidInput("eigensolve_fd: n_max must be at least 1");
    grid.validate();
    if (block.v.size() != grid.n) throw GridMismatch("eigensolve_fd: block grid size mismatch");

    const std::size_t begin = block.interior_begin();
    const std::size_t m = grid.n - begin;
    if (n_max > m) throw InvalidInput("eigensolve_fd: more states requested than grid nodes");

    const double dx = grid.dx();
    const double off = -block.kinetic * konst.hbar * konst.hbar / (dx * dx);
    std::vector<double> diag(m);
    for (std::size_t i = 0; i < m; ++i) diag[i] = -2.0 * off + block.v[begin + i];

    // Gershgorin bounds
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < m; ++i) {
        const double radius = (i > 0 ? std::fabs(off) : 0.0) + (i + 1 < m ? std::fabs(off) : 0.0);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    const double scale = std::max({std::fabs(lo), std::fabs(hi), 1.0});
    const double pivmin = scale * 1e-290;

    std::vector<double> energies(n_max);
    const auto count = static_cast<std::ptrdiff_t>(n_max);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t j = 0; j < count; ++j) {
        energies[static_cast<std::size_t>(j)] =
            bisect_eigenvalue(diag, off, lo, hi, static_cast<std::size_t>(j), pivmin);
    }

    // Confinement: the top requested state must sit below the potential at the
    // non-wall boundaries of the window, otherwise it leaks off the grid.
    double edge = block.v[grid.n - 1];
    if (!block.first_interior) edge = std::min(edge, block.v[0]);
    if (energies[n_max - 1] > edge)
        throw NotConfining("eigensolve_fd: requested states exceed the boundary potential");

    Spectrum spectrum;
    spectrum.energies = energies;
    if (!want_vectors) return spectrum;

    // Group near-degenerate eigenvalues so cluster members are orthogonalized
    // sequentially; distinct clusters are independent work items.
    const double cluster_gap = 1e-7 * scale;
    std::vector<std::size_t> group_start;
    for (std::size_t j = 0; j < n_max; ++j) {
        if (j == 0 || energies[j] - energies[j - 1] > cluster_gap) group_start.push_back(j);
    }
    group_start.push_back(n_max);

    std::vector<std::vector<double>> vectors(n_max);
    const auto groups = static_cast<std::ptrdiff_t>(group_start.size() - 1);
#pragma omp parallel for schedule(dynamic) if (par)
    for (std::ptrdiff_t gi = 0; gi < groups; ++gi) {
        const std::size_t gbegin = group_start[static_cast<std::size_t>(gi)];
        const std::size_t gend = group_start[static_cast<std::size_t>(gi) + 1];
        std::vector<const std::vector<double>*> cluster;
        for (std::size_t j = gbegin; j < gend; ++j) {
            vectors[j] = inverse_iteration(diag, off, energies[j], cluster);
            cluster.push_back(&vectors[j]);
        }
    }

    spectrum.wavefunctions.resize(n_max);
    const double quad_scale = 1.0 / std::sqrt(dx);
    for (std::size_t j = 0; j < n_max; ++j) {
        auto& full = spectrum.wavefunctions[j];
        full.assign(grid.n, 0.0);
        double peak = 0.0;
        for (double a : vectors[j]) peak = std::max(peak, std::fabs(a));
        double sign = 1.0;
        for (double a : vectors[j]) {
            if (std::fabs(a) > 1e-8 * peak) {
                sign = a > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t i = 0; i < m; ++i) full[begin + i] = sign * quad_scale * vectors[j][i];
    }
    return spectrum;
}

double airy_negated_zero(std::size_t n) {
    if (n < 1) throw InvalidInput("airy_negated_zero: n starts at 1");
    static constexpr std::array<double, 10> table = {
        2.3381074104597670, 4.0879494441309706, 5.5205598280955510, 6.7867080900717590,
        7.9441335871208531, 9.0226508533409804, 10.040174341558086, 11.008524303733263,
        11.936015563236263, 12.828776752865757,
    };
    if (n <= table.size()) return table[n - 1];
    // Asymptotic expansion in t = 3 pi (4n - 1) / 8; error < 1e-12 for n > 10.
    const double t = 3.0 * 3.141592653589793238462643 * (4.0 * static_cast<double>(n) - 1.0) / 8.0;
    const double t2 = t * t;
    const double series =
        1.0 + (5.0 / 48.0) / t2 - (5.0 / 36.0) / (t2 * t2) +
        (77125.0 / 82944.0) / (t2 * t2 * t2) - (108056875.0 / 6967296.0) / (t2 * t2 * t2 * t2);
    return std::cbrt(t * t) * series;
}

std::vector<double> bouncer_levels_airy(const Constants& konst, std::size_t n_max) {
    if (!(konst.g > 0.0)) throw InvalidInput("bouncer_levels_airy: requires g > 0");
    const double unit = std::cbrt(konst.hbar * konst.hbar * konst.m * konst.g * konst.g / 2.0);
    std::vector<double> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(unit * airy_negated_zero(n));
    return out;
}

}  // namespace clocksim

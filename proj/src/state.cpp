#include "clocksim/state.hpp"

#include <cmath>

#include "clocksim/errors.hpp"

namespace clocksim {

std::vector<cplx> gaussian_packet(const Grid1D& grid, double center, double sigma, double p0,
                                  double hbar) {
    if (!(sigma > 0.0)) throw InvalidInput("gaussian_packet: sigma must be positive");
    std::vector<cplx> out(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double d = grid.x(i) - center;
        const double envelope = std::exp(-d * d / (4.0 * sigma * sigma));
        out[i] = std::polar(envelope, p0 * d / hbar);
    }
    normalize(out, grid.dx());
    return out;
}

std::vector<cplx> oscillator_ground_state(const Grid1D& grid, double center, double kinetic,
                                          double m, double omega_trap, double hbar) {
    const double stiffness = m * omega_trap * omega_trap;
    const double sigma = std::sqrt(hbar * std::sqrt(kinetic / (2.0 * stiffness)));
    return gaussian_packet(grid, center, sigma, 0.0, hbar);
}

JointState product_state(const Grid1D& grid, const InternalClockSpec& clock,
                         std::vector<cplx> packet) {
    if (packet.size() != grid.n) throw GridMismatch("product_state: packet length != grid size");
    normalize(packet, grid.dx());
    JointState state;
    state.grid = grid;
    state.psi.resize(clock.level_count());
    for (std::size_t k = 0; k < clock.level_count(); ++k) {
        state.psi[k].resize(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) state.psi[k][i] = clock.amplitudes[k] * packet[i];
    }
    return state;
}

JointState per_level_state(const Grid1D& grid, const InternalClockSpec& clock,
                           std::vector<std::vector<cplx>> packets) {
    if (packets.size() != clock.level_count())
        throw GridMismatch("per_level_state: packet count != level count");
    JointState state;
    state.grid = grid;
    state.psi.resize(packets.size());
    for (std::size_t k = 0; k < packets.size(); ++k) {
        if (packets[k].size() != grid.n)
            throw GridMismatch("per_level_state: packet length != grid size");
        normalize(packets[k], grid.dx());
        state.psi[k].resize(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i)
            state.psi[k][i] = clock.amplitudes[k] * packets[k][i];
    }
    return state;
}

double level_population(const JointState& state, std::size_t level) {
    if (level >= state.level_count()) throw IndexOutOfRange("level_population: no such level");
    double s = 0.0;
    for (const cplx& z : state.psi[level]) s += std::norm(z);
    return s * state.grid.dx();
}

double norm_squared(const JointState& state) {
    double s = 0.0;
    for (std::size_t k = 0; k < state.level_count(); ++k) s += level_population(state, k);
    return s;
}

double fidelity(const JointState& a, const JointState& b) {
    if (a.grid != b.grid || a.level_count() != b.level_count())
        throw GridMismatch("fidelity: states live on different grids");
    cplx overlap = 0.0;
    for (std::size_t k = 0; k < a.level_count(); ++k) {
        for (std::size_t i = 0; i < a.grid.n; ++i) {
            overlap += std::conj(a.psi[k][i]) * b.psi[k][i];
        }
    }
    return std::abs(overlap) * a.grid.dx();
}

void normalize(std::vector<cplx>& vec, double dx) {
    double s = 0.0;
    for (const cplx& z : vec) s += std::norm(z);
    s *= dx;
    if (!(s > 0.0)) throw InvalidInput("normalize: vector has zero norm");
    const double scale = 1.0 / std::sqrt(s);
    for (cplx& z : vec) z *= scale;
}

void normalize(JointState& state) {
    const double s = norm_squared(state);
    if (!(s > 0.0)) throw InvalidInput("normalize: state has zero norm");
    const double scale = 1.0 / std::sqrt(s);
    for (auto& level : state.psi) {
        for (cplx& z : level) z *= scale;
    }
}

}  // namespace clocksim

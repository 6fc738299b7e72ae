#include "clocksim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "clocksim/blocks.hpp"
#include "clocksim/classical.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/numeric.hpp"
#include "clocksim/observables.hpp"
#include "clocksim/propagate.hpp"

namespace clocksim {

namespace {

constexpr double kPi = 3.141592653589793238462643;

double wrap_to_pi(double d) {
    constexpr double two_pi = 2.0 * kPi;
    return d - two_pi * std::round(d / two_pi);
}

/// Turns states into series samples, keeping phase unwrapping continuous
/// across samples.
class ObservableRecorder {
public:
    ObservableRecorder(std::size_t levels, double hbar) : hbar_(hbar), last_raw_(levels > 1 ? levels - 1 : 0), acc_(last_raw_.size()) {}

    SeriesSample sample(const JointState& state) {
        SeriesSample row;
        row.t = state.t;
        const auto ex = expectations(state, hbar_);
        row.norm = ex.norm;
        row.mean_x = ex.mean_x;
        row.mean_p = ex.mean_p;
        row.populations = ex.level_populations;
        const auto rho = reduced_internal(state);
        row.purity = purity(rho);
        row.visibility = rho.dim > 1 ? visibility(rho, 0, 1) : 0.0;
        row.phases.resize(last_raw_.size());
        for (std::size_t j = 0; j < last_raw_.size(); ++j) {
            const double raw = std::arg(rho.at(0, j + 1));
            if (first_) {
                acc_[j] = raw;
            } else {
                acc_[j] += wrap_to_pi(raw - last_raw_[j]);
            }
            last_raw_[j] = raw;
            row.phases[j] = acc_[j];
        }
        first_ = false;
        return row;
    }

private:
    double hbar_;
    std::vector<double> last_raw_;
    std::vector<double> acc_;
    bool first_ = true;
};

void check_norm_drift(double before, double after) {
    if (std::fabs(after - before) > 1e-8)
        throw NonUnitary("scenario: propagation drifted the norm; implementation bug");
}

std::pair<std::vector<double>, std::vector<double>> phase_series(const SeriesRecord& rec) {
    std::vector<double> t, phi;
    t.reserve(rec.samples.size());
    phi.reserve(rec.samples.size());
    for (const auto& s : rec.samples) {
        t.push_back(s.t);
        phi.push_back(s.phases.at(0));
    }
    return {t, phi};
}

OracleCheck make_check(std::string name, double measured, double expected, double tol,
                       bool relative) {
    OracleCheck c;
    c.name = std::move(name);
    c.measured = measured;
    c.expected = expected;
    c.tolerance = tol;
    const double err = std::fabs(measured - expected);
    c.passed = relative ? err <= tol * std::fabs(expected) : err <= tol;
    return c;
}

double harmonic_ground_sigma(const InternalClockSpec& clock, const PotentialSpec& pot,
                             const Constants& konst) {
    const double a0 = kinetic_coefficient(konst.m, clock.levels[0], konst.c);
    const double stiffness = konst.m * pot.omega * pot.omega;
    return std::sqrt(konst.hbar * std::sqrt(a0 / (2.0 * stiffness)));
}

// ---------------------------------------------------------------------------
// fixed_height_clocks / cancellation_control (one code path, branch on the
// potential field only)
// ---------------------------------------------------------------------------

ScenarioResult run_two_clock_comparison(const ScenarioConfig& cfg, Exec exec) {
    const bool cancelling = cfg.potential.kind == PotentialKind::cancelling_linear;
    const Constants& konst = cfg.constants;
    const double gap = cfg.clock.levels[1] - cfg.clock.levels[0];
    const double t_total = cfg.evolution.dt * static_cast<double>(cfg.evolution.steps);

    ScenarioResult result;
    result.kind = cfg.kind;

    std::vector<double> final_phases;
    double worst_fidelity = 1.0;
    const char* labels[2] = {"clock_low", "clock_high"};
    for (std::size_t ci = 0; ci < 2; ++ci) {
        const double h = cfg.heights[ci];
        const Grid1D grid{h + cfg.grid.x_min, h + cfg.grid.x_max, cfg.grid.n};
        PotentialSpec pot = cfg.potential;
        double center = h;
        if (!cancelling) {
            pot = PotentialSpec::Harmonic(h, cfg.potential.omega);
            center = stationary_point(pot, cfg.clock.levels[0], konst).x;
        }
        const auto blocks = build_blocks(cfg.clock, pot, konst, grid);
        const auto initial = product_state(
            grid, cfg.clock, gaussian_packet(grid, center, cfg.sigma, 0.0, konst.hbar));

        JointState state = initial;
        const double norm0 = norm_squared(state);
        SplitOperator prop(blocks, grid, konst, cfg.evolution.dt);
        ObservableRecorder recorder(cfg.clock.level_count(), konst.hbar);
        SeriesRecord rec;
        rec.label = labels[ci];
        rec.samples.push_back(recorder.sample(state));
        for (std::size_t s = 0; s < cfg.evolution.steps; s += cfg.evolution.record_every) {
            prop.advance(state, cfg.evolution.record_every, exec);
            rec.samples.push_back(recorder.sample(state));
        }
        check_norm_drift(norm0, norm_squared(state));
        final_phases.push_back(rec.samples.back().phases.at(0));
        if (cancelling) {
            const auto reference = free_reference_evolution(initial, blocks, konst,
                                                            cfg.evolution.dt, cfg.evolution.steps,
                                                            exec);
            worst_fidelity = std::min(worst_fidelity, fidelity(reference, state));
        }
        result.series.push_back(std::move(rec));
    }

    const double measured =
        redshift_from_phases(final_phases[0], final_phases[1], gap, t_total, konst);
    const double dx = cfg.heights[1] - cfg.heights[0];
    result.summary.emplace_back("measured_shift", measured);
    result.summary.emplace_back("height_separation", dx);

    if (cancelling) {
        result.summary.emplace_back("expected_shift", 0.0);
        result.summary.emplace_back("fidelity_vs_free_reference", worst_fidelity);
        result.checks.push_back(make_check("shift_cancelled", measured, 0.0,
                                           cfg.tolerances.cancellation_shift, false));
        result.checks.push_back(make_check("free_reference_fidelity", 1.0 - worst_fidelity, 0.0,
                                           cfg.tolerances.fidelity_deficit, false));
    } else {
        const double expected = analytic_redshift(dx, konst);
        result.summary.emplace_back("expected_shift", expected);
        result.checks.push_back(
            make_check("redshift_vs_g_dx_over_c2", measured, expected, cfg.tolerances.shift, false));
    }
    return result;
}

// ---------------------------------------------------------------------------
// bouncer_clock
// ---------------------------------------------------------------------------

struct BouncerQuadratures {
    double mean_x = 0.0;
    double mean_p2 = 0.0;
};

BouncerQuadratures level_quadratures(const BlockHamiltonian& block, const Grid1D& grid,
                                     const std::vector<double>& wavefunction, double energy_n) {
    const double dx = grid.dx();
    double mean_x = 0.0, mean_v = 0.0;
    for (std::size_t i = block.interior_begin(); i < grid.n; ++i) {
        const double w = wavefunction[i] * wavefunction[i];
        mean_x += w * grid.x(i);
        mean_v += w * block.v[i];
    }
    mean_x *= dx;
    mean_v *= dx;
    // finite-difference-consistent <p^2> from a_k <p^2> + <V> = E_n
    return {mean_x, (energy_n - mean_v) / block.kinetic};
}

ScenarioResult run_bouncer_clock(const ScenarioConfig& cfg, Exec exec) {
    const Constants& konst = cfg.constants;
    const double gap = cfg.clock.levels[1] - cfg.clock.levels[0];
    const auto blocks = build_blocks(cfg.clock, cfg.potential, konst, cfg.grid);
    const std::size_t n_top = *std::max_element(cfg.bouncer_states.begin(), cfg.bouncer_states.end());

    std::vector<Spectrum> spectra;
    spectra.reserve(blocks.size());
    for (const auto& block : blocks)
        spectra.push_back(eigensolve_fd(block, cfg.grid, konst, n_top, true, exec));

    ScenarioResult result;
    result.kind = cfg.kind;

    std::vector<double> fractional_shift, mean_x_n, mean_p2_n;
    double worst_drift = 0.0;
    for (std::size_t target : cfg.bouncer_states) {
        const std::size_t idx = target - 1;
        // each internal level carries its own block's eigenvector
        std::vector<std::vector<cplx>> packets(blocks.size());
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            packets[k].assign(cfg.grid.n, cplx{0.0, 0.0});
            for (std::size_t i = 0; i < cfg.grid.n; ++i)
                packets[k][i] = spectra[k].wavefunctions[idx][i];
        }
        JointState state = per_level_state(cfg.grid, cfg.clock, std::move(packets));
        const double norm0 = norm_squared(state);
        const double x0 = expectations(state, konst.hbar).mean_x;

        CrankNicolson prop(blocks, cfg.grid, konst, cfg.evolution.dt);
        ObservableRecorder recorder(cfg.clock.level_count(), konst.hbar);
        SeriesRecord rec;
        rec.label = "bouncer_n" + std::to_string(target);
        rec.samples.push_back(recorder.sample(state));
        for (std::size_t s = 0; s < cfg.evolution.steps; s += cfg.evolution.record_every) {
            prop.advance(state, cfg.evolution.record_every, exec);
            rec.samples.push_back(recorder.sample(state));
        }
        check_norm_drift(norm0, norm_squared(state));

        for (const auto& row : rec.samples)
            worst_drift = std::max(worst_drift, std::fabs(row.mean_x - x0));

        const auto [t, phi] = phase_series(rec);
        const double rate = linear_fit(t, phi).second;
        fractional_shift.push_back(rate * konst.hbar / gap - 1.0);

        // midpoint-in-energy quadratures: average the two levels' eigenvectors
        double mx = 0.0, mp2 = 0.0;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const auto q = level_quadratures(blocks[k], cfg.grid, spectra[k].wavefunctions[idx],
                                             spectra[k].energies[idx]);
            mx += q.mean_x;
            mp2 += q.mean_p2;
        }
        mean_x_n.push_back(mx / static_cast<double>(blocks.size()));
        mean_p2_n.push_back(mp2 / static_cast<double>(blocks.size()));
        result.series.push_back(std::move(rec));
    }

    const double c2 = konst.c * konst.c;
    const double net_shift = fractional_shift[1] - fractional_shift[0];
    const double motional = (mean_p2_n[1] - mean_p2_n[0]) / (2.0 * konst.m * konst.m * c2);
    const double gravitational = net_shift + motional;
    const double oracle = konst.g * (mean_x_n[1] - mean_x_n[0]) / c2;

    result.summary.emplace_back("net_frequency_shift", net_shift);
    result.summary.emplace_back("motional_correction", motional);
    result.summary.emplace_back("gravitational_shift", gravitational);
    result.summary.emplace_back("expected_g_dx_over_c2", oracle);
    result.summary.emplace_back("mean_x_drift", worst_drift);

    result.checks.push_back(make_check("gravitational_shift_vs_g_dx_over_c2", gravitational,
                                       oracle, cfg.tolerances.bouncer_shift_rel, true));
    result.checks.push_back(
        make_check("bound_state_mean_x_drift", worst_drift, 0.0, cfg.tolerances.bouncer_drift, false));
    return result;
}

// ---------------------------------------------------------------------------
// moving_clock
// ---------------------------------------------------------------------------

ScenarioResult run_moving_clock(const ScenarioConfig& cfg, Exec exec) {
    const Constants& konst = cfg.constants;
    const double gap = cfg.clock.levels[1] - cfg.clock.levels[0];
    const double center = 0.5 * (cfg.grid.x_min + cfg.grid.x_max);
    const auto blocks = build_blocks(cfg.clock, cfg.potential, konst, cfg.grid);

    std::vector<double> momenta = {0.0};
    momenta.insert(momenta.end(), cfg.momenta.begin(), cfg.momenta.end());

    ScenarioResult result;
    result.kind = cfg.kind;
    std::vector<double> rates;
    for (double p0 : momenta) {
        JointState state = product_state(
            cfg.grid, cfg.clock, gaussian_packet(cfg.grid, center, cfg.sigma, p0, konst.hbar));
        const double norm0 = norm_squared(state);
        SplitOperator prop(blocks, cfg.grid, konst, cfg.evolution.dt);
        ObservableRecorder recorder(cfg.clock.level_count(), konst.hbar);
        SeriesRecord rec;
        rec.label = "p0_" + std::to_string(p0);
        rec.samples.push_back(recorder.sample(state));
        for (std::size_t s = 0; s < cfg.evolution.steps; s += cfg.evolution.record_every) {
            prop.advance(state, cfg.evolution.record_every, exec);
            rec.samples.push_back(recorder.sample(state));
        }
        check_norm_drift(norm0, norm_squared(state));
        const auto [t, phi] = phase_series(rec);
        rates.push_back(linear_fit(t, phi).second);
        result.series.push_back(std::move(rec));
    }

    // rate deficit relative to the zero-momentum baseline; the packet's own
    // momentum spread contributes equally to both and drops out
    const double m2c2 = 2.0 * konst.m * konst.m * konst.c * konst.c;
    std::vector<double> log_p, log_d;
    for (std::size_t i = 1; i < momenta.size(); ++i) {
        const double deficit = (rates[0] - rates[i]) * konst.hbar / gap;
        result.summary.emplace_back("deficit_p0_" + std::to_string(momenta[i]), deficit);
        result.checks.push_back(make_check("deficit_vs_p0_squared_p0_" + std::to_string(momenta[i]),
                                           deficit, momenta[i] * momenta[i] / m2c2,
                                           cfg.tolerances.moving_amplitude, false));
        log_p.push_back(std::log(momenta[i]));
        log_d.push_back(std::log(deficit));
    }
    if (log_p.size() >= 2) {
        const double slope = linear_fit(log_p, log_d).second;
        result.summary.emplace_back("log_log_slope", slope);
        result.checks.push_back(
            make_check("quadratic_scaling_slope", slope, 2.0, cfg.tolerances.moving_slope, false));
    }
    return result;
}

// ---------------------------------------------------------------------------
// superposition_interference
// ---------------------------------------------------------------------------

std::vector<BlockHamiltonian> build_two_site_blocks(const InternalClockSpec& clock,
                                                    const Constants& konst, const Grid1D& grid,
                                                    double site_a, double site_b, double omega) {
    std::vector<BlockHamiltonian> blocks;
    blocks.reserve(clock.level_count());
    const double c2 = konst.c * konst.c;
    for (std::size_t k = 0; k < clock.level_count(); ++k) {
        BlockHamiltonian block;
        block.level = k;
        block.energy = clock.levels[k];
        block.kinetic = kinetic_coefficient(konst.m, block.energy, konst.c);
        block.v.resize(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) {
            const double x = grid.x(i);
            const double da = x - site_a, db = x - site_b;
            const double well = 0.5 * konst.m * omega * omega * std::min(da * da, db * db);
            CompensatedSum sum;
            sum.add((konst.m + block.energy / c2) * konst.g * x);
            sum.add(well);
            sum.add(block.energy);
            block.v[i] = sum.value();
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

ScenarioResult run_superposition(const ScenarioConfig& cfg, Exec exec) {
    const Constants& konst = cfg.constants;
    const double gap = cfg.clock.levels[1] - cfg.clock.levels[0];
    const double site_a = cfg.potential.center - 0.5 * cfg.separation;
    const double site_b = cfg.potential.center + 0.5 * cfg.separation;
    const double omega = cfg.potential.omega;

    const auto blocks = build_two_site_blocks(cfg.clock, konst, cfg.grid, site_a, site_b, omega);

    // both branches start in the local (gravity-sagged) ground state
    const double sag =
        stationary_point(PotentialSpec::Harmonic(0.0, omega), cfg.clock.levels[0], konst).x;
    auto packet_a = gaussian_packet(cfg.grid, site_a + sag, cfg.sigma, 0.0, konst.hbar);
    const auto packet_b = gaussian_packet(cfg.grid, site_b + sag, cfg.sigma, 0.0, konst.hbar);
    for (std::size_t i = 0; i < cfg.grid.n; ++i) packet_a[i] += packet_b[i];
    JointState state = product_state(cfg.grid, cfg.clock, std::move(packet_a));

    const double mid = 0.5 * (site_a + site_b) + sag;
    const double dxw = cfg.grid.dx();
    auto branch_args = [&](const JointState& st) {
        cplx left = 0.0, right = 0.0;
        for (std::size_t i = 0; i < cfg.grid.n; ++i) {
            const cplx c = st.psi[0][i] * std::conj(st.psi[1][i]) * dxw;
            (cfg.grid.x(i) < mid ? left : right) += c;
        }
        return std::pair<double, double>{std::arg(left), std::arg(right)};
    };

    const double norm0 = norm_squared(state);
    SplitOperator prop(blocks, cfg.grid, konst, cfg.evolution.dt);
    ObservableRecorder recorder(cfg.clock.level_count(), konst.hbar);
    SeriesRecord rec;
    rec.label = "two_site";
    std::vector<double> raw_left, raw_right, times;
    rec.samples.push_back(recorder.sample(state));
    {
        const auto [al, ar] = branch_args(state);
        raw_left.push_back(al);
        raw_right.push_back(ar);
        times.push_back(state.t);
    }
    for (std::size_t s = 0; s < cfg.evolution.steps; s += cfg.evolution.record_every) {
        prop.advance(state, cfg.evolution.record_every, exec);
        rec.samples.push_back(recorder.sample(state));
        const auto [al, ar] = branch_args(state);
        raw_left.push_back(al);
        raw_right.push_back(ar);
        times.push_back(state.t);
    }
    check_norm_drift(norm0, norm_squared(state));

    ScenarioResult result;
    result.kind = cfg.kind;

    double worst = 0.0;
    for (const auto& row : rec.samples) {
        worst = std::max(
            worst, std::fabs(row.visibility - analytic_visibility(gap, cfg.separation, row.t, konst)));
    }

    // branch phase difference grows linearly; visibility zeros sit at odd
    // multiples of pi, the revival at 2 pi
    const auto left = unwrap_phases(raw_left);
    const auto right = unwrap_phases(raw_right);
    std::vector<double> delta(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) delta[i] = right[i] - left[i];

    auto crossing_time = [&](double level) {
        for (std::size_t i = 1; i < delta.size(); ++i) {
            if ((delta[i - 1] < level) != (delta[i] < level)) {
                const double f = (level - delta[i - 1]) / (delta[i] - delta[i - 1]);
                return times[i - 1] + f * (times[i] - times[i - 1]);
            }
        }
        return -1.0;
    };

    const double t_zero = crossing_time(kPi);
    const double t_revival = crossing_time(2.0 * kPi);
    const double expected_zero =
        kPi * konst.hbar * konst.c * konst.c / (konst.g * cfg.separation * gap);

    result.series.push_back(std::move(rec));
    result.summary.emplace_back("max_pointwise_visibility_error", worst);
    result.summary.emplace_back("first_zero_time", t_zero);
    result.summary.emplace_back("revival_time", t_revival);
    result.summary.emplace_back("expected_first_zero_time", expected_zero);

    result.checks.push_back(make_check("visibility_pointwise_vs_closed_form", worst, 0.0,
                                       cfg.tolerances.visibility_pointwise, false));
    result.checks.push_back(make_check("first_visibility_zero_location", t_zero, expected_zero,
                                       cfg.tolerances.zero_time_rel, true));
    if (t_revival > 0.0) {
        result.checks.push_back(make_check("revival_time_location", t_revival, 2.0 * expected_zero,
                                           cfg.tolerances.zero_time_rel, true));
    }
    return result;
}

}  // namespace

const char* scenario_kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::fixed_height_clocks: return "fixed_height_clocks";
        case ScenarioKind::cancellation_control: return "cancellation_control";
        case ScenarioKind::bouncer_clock: return "bouncer_clock";
        case ScenarioKind::moving_clock: return "moving_clock";
        case ScenarioKind::superposition_interference: return "superposition_interference";
    }
    return "unknown";
}

ScenarioConfig validate_scenario(ScenarioConfig cfg) {
    cfg.constants.validate();
    cfg.grid.validate();
    cfg.potential.validate();
    try {
        cfg.clock.validate(cfg.constants);
    } catch (const ApproximationBreach&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("clock: ") + e.what());
    }
    if (!(cfg.evolution.dt > 0.0)) throw ConfigInvalid("evolution.dt: must be positive");
    if (cfg.evolution.steps < 1) throw ConfigInvalid("evolution.steps: must be at least 1");
    if (cfg.evolution.record_every < 1 || cfg.evolution.steps % cfg.evolution.record_every != 0)
        throw ConfigInvalid("evolution.record_every: steps must be a positive multiple of it");

    const bool needs_coherence = true;
    if (needs_coherence && cfg.clock.level_count() < 2)
        throw ConfigInvalid("clock.levels: scenarios measure a coherence; need at least two levels");

    switch (cfg.kind) {
        case ScenarioKind::fixed_height_clocks:
            if (cfg.potential.kind != PotentialKind::harmonic)
                throw ConfigInvalid("potential.kind: fixed_height_clocks requires a harmonic trap");
            break;
        case ScenarioKind::cancellation_control:
            if (cfg.potential.kind != PotentialKind::cancelling_linear)
                throw ConfigInvalid(
                    "potential.kind: cancellation_control requires the cancelling potential");
            if (!(cfg.sigma > 0.0))
                throw ConfigInvalid(
                    "sigma: cancellation_control has no trap to derive a packet width from");
            break;
        case ScenarioKind::bouncer_clock: {
            if (cfg.potential.kind != PotentialKind::hard_floor)
                throw ConfigInvalid("potential.kind: bouncer_clock requires a hard floor");
            if (cfg.bouncer_states.size() != 2 || cfg.bouncer_states[0] < 1 ||
                cfg.bouncer_states[1] <= cfg.bouncer_states[0])
                throw ConfigInvalid("bouncer_states: need two increasing 1-based state indices");
            if (!(cfg.potential.floor > cfg.grid.x_min && cfg.potential.floor < cfg.grid.x_max))
                throw ConfigInvalid("potential.floor: must lie inside the grid domain");
            break;
        }
        case ScenarioKind::moving_clock:
            if (cfg.potential.kind != PotentialKind::zero)
                throw ConfigInvalid("potential.kind: moving_clock requires the zero potential");
            if (cfg.constants.g != 0.0)
                throw ConfigInvalid("constants.g: moving_clock isolates the velocity term; set g = 0");
            if (cfg.momenta.empty()) throw ConfigInvalid("momenta: need at least one p0 value");
            for (double p : cfg.momenta)
                if (!(p > 0.0)) throw ConfigInvalid("momenta: p0 values must be positive");
            if (!(cfg.sigma > 0.0)) throw ConfigInvalid("sigma: moving_clock needs a packet width");
            break;
        case ScenarioKind::superposition_interference: {
            if (cfg.potential.kind != PotentialKind::harmonic)
                throw ConfigInvalid(
                    "potential.kind: superposition_interference requires harmonic trap sites");
            if (!(cfg.separation > 0.0))
                throw ConfigInvalid("separation: needs a positive site distance");
            const double lo = cfg.potential.center - 0.5 * cfg.separation;
            const double hi = cfg.potential.center + 0.5 * cfg.separation;
            if (!(lo > cfg.grid.x_min && hi < cfg.grid.x_max))
                throw ConfigInvalid("separation: both sites must lie inside the grid domain");
            if (std::fabs(std::abs(cfg.clock.amplitudes[0]) - std::abs(cfg.clock.amplitudes[1])) >
                1e-9)
                throw ConfigInvalid(
                    "clock.amplitudes: the visibility law assumes an equal-amplitude clock");
            break;
        }
    }

    if (cfg.kind == ScenarioKind::fixed_height_clocks ||
        cfg.kind == ScenarioKind::cancellation_control) {
        if (cfg.heights.size() != 2 || cfg.heights[0] == cfg.heights[1])
            throw ConfigInvalid("heights: need exactly two distinct clock heights");
        std::sort(cfg.heights.begin(), cfg.heights.end());
    }

    if (cfg.sigma == 0.0 && cfg.potential.kind == PotentialKind::harmonic)
        cfg.sigma = harmonic_ground_sigma(cfg.clock, cfg.potential, cfg.constants);
    const bool uses_packet = cfg.kind != ScenarioKind::bouncer_clock;
    if (uses_packet && !(cfg.sigma > 0.0))
        throw ConfigInvalid("sigma: packet width must end up positive");
    return cfg;
}

ScenarioResult run_scenario(const ScenarioConfig& raw, Exec exec) {
    const ScenarioConfig cfg = validate_scenario(raw);
    switch (cfg.kind) {
        case ScenarioKind::fixed_height_clocks:
        case ScenarioKind::cancellation_control:
            return run_two_clock_comparison(cfg, exec);
        case ScenarioKind::bouncer_clock:
            return run_bouncer_clock(cfg, exec);
        case ScenarioKind::moving_clock:
            return run_moving_clock(cfg, exec);
        case ScenarioKind::superposition_interference:
            return run_superposition(cfg, exec);
    }
    throw ConfigInvalid("scenario: unknown kind");
}

ScenarioConfig cancellation_variant(ScenarioConfig fixed) {
    ScenarioConfig out = validate_scenario(std::move(fixed));
    out.kind = ScenarioKind::cancellation_control;
    out.potential = PotentialSpec::CancellingLinear();
    return out;
}

std::vector<std::string> config_field_diff(const ScenarioConfig& a, const ScenarioConfig& b) {
    std::vector<std::string> diff;
    if (a.kind != b.kind) diff.emplace_back("kind");
    if (a.constants.c != b.constants.c || a.constants.g != b.constants.g ||
        a.constants.hbar != b.constants.hbar || a.constants.m != b.constants.m)
        diff.emplace_back("constants");
    if (a.clock != b.clock) diff.emplace_back("clock");
    if (a.potential != b.potential) diff.emplace_back("potential");
    if (a.grid != b.grid) diff.emplace_back("grid");
    if (a.evolution != b.evolution) diff.emplace_back("evolution");
    if (a.heights != b.heights) diff.emplace_back("heights");
    if (a.separation != b.separation) diff.emplace_back("separation");
    if (a.momenta != b.momenta) diff.emplace_back("momenta");
    if (a.bouncer_states != b.bouncer_states) diff.emplace_back("bouncer_states");
    if (a.sigma != b.sigma) diff.emplace_back("sigma");
    if (!(a.tolerances == b.tolerances)) diff.emplace_back("tolerances");
    return diff;
}

}  // namespace clocksim

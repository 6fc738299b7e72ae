#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clocksim/clock.hpp"
#include "clocksim/constants.hpp"
#include "clocksim/grid.hpp"
#include "clocksim/parallel.hpp"
#include "clocksim/potential.hpp"
#include "clocksim/state.hpp"

namespace clocksim {

enum class ScenarioKind {
    fixed_height_clocks,
    cancellation_control,
    bouncer_clock,
    moving_clock,
    superposition_interference,
};

const char* scenario_kind_name(ScenarioKind kind);

struct EvolutionParams {
    double dt = 1e-3;
    std::size_t steps = 1000;
    std::size_t record_every = 10;
    bool operator==(const EvolutionParams&) const = default;
};

/// Pass thresholds for the per-kind oracle checks; defaults follow the
/// accuracy the leading-order oracles support at eps <= 0.05.
struct ScenarioTolerances {
    double shift = 1e-4;                ///< fixed-height redshift, absolute
    double cancellation_shift = 1e-10;  ///< residual shift with the cancelling potential
    double fidelity_deficit = 1e-10;    ///< 1 - |<ref|psi>| against the free reference
    double bouncer_shift_rel = 1e-3;    ///< inter-level frequency shift vs g d<x>/c^2
    double bouncer_drift = 1e-8;        ///< <x> drift of a bouncer eigenstate
    double moving_amplitude = 1e-6;     ///< deficit vs p0^2/(2 m^2 c^2), absolute
    double moving_slope = 0.01;         ///< log-log slope vs 2
    double visibility_pointwise = 1e-4;
    double zero_time_rel = 1e-3;        ///< first visibility zero location, relative
    bool operator==(const ScenarioTolerances&) const = default;
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::fixed_height_clocks;
    Constants constants;
    InternalClockSpec clock;
    PotentialSpec potential;
    /// For the two-clock kinds the grid is relative to each clock's height;
    /// for bouncer/moving/superposition it is the absolute domain.
    Grid1D grid;
    EvolutionParams evolution;
    std::vector<double> heights;              ///< two-clock kinds: exactly two
    double separation = 0.0;                  ///< superposition: distance between the sites
    std::vector<double> momenta;              ///< moving clock: p0 values
    std::vector<std::size_t> bouncer_states;  ///< bouncer: two 1-based level indices
    double sigma = 0.0;                       ///< packet width; 0 derives the trap ground width
    ScenarioTolerances tolerances;

    bool operator==(const ScenarioConfig&) const = default;
};

/// One recorded observable row. phases[j] is the unwrapped coherence phase
/// arg rho_{0,j+1}; populations has one entry per level.
struct SeriesSample {
    double t = 0.0;
    double norm = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
    double purity = 0.0;
    double visibility = 0.0;
    std::vector<double> phases;
    std::vector<double> populations;
};

struct SeriesRecord {
    std::string label;
    std::vector<SeriesSample> samples;
};

/// Measured value vs its analytic oracle, with the applied tolerance.
struct OracleCheck {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ScenarioResult {
    ScenarioKind kind = ScenarioKind::fixed_height_clocks;
    std::vector<SeriesRecord> series;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<OracleCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Validates kind-specific completeness and fills derived defaults (packet
/// width from the trap). Throws ConfigInvalid naming the offending field.
ScenarioConfig validate_scenario(ScenarioConfig cfg);

ScenarioResult run_scenario(const ScenarioConfig& cfg, Exec exec = default_exec());

/// The cancellation control of a fixed-height config: same geometry with the
/// trap swapped for the cancelling potential. Keeps every other field equal
/// so the two runs share one code path.
ScenarioConfig cancellation_variant(ScenarioConfig fixed);

/// Names of fields on which two configs differ; guards the fixed-height /
/// cancellation pairing ("kind" and "potential" only).
std::vector<std::string> config_field_diff(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace clocksim

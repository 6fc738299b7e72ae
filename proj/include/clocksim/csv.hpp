#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "clocksim/scenario.hpp"

namespace clocksim {

/// Serializes a double with 17 significant digits; parses back bit-identical.
std::string format_real(double v);

/// Writes one observable series as CSV: a header line
///   t,norm,mean_x,mean_p,purity,visibility,phase_1..,level_pop_0..
/// then one row per sample. Field separator ',', decimal '.', newline '\n'.
void emit_series_csv(const SeriesRecord& series, std::size_t level_count, std::ostream& sink);

/// Writes the summary scalars and check verdicts as key=value lines.
void emit_summary(const ScenarioResult& result, std::ostream& sink);

/// Files written for one run, recorded in the manifest.
struct RunManifest {
    std::string config_path;
    std::string output_dir;
    std::vector<std::string> files;
    double wall_seconds = 0.0;
    std::string version;
    std::string config_hash_hex;
};

/// Writes a ScenarioResult to <outdir>/series_<label>.csv + summary.txt and
/// returns the manifest (also written as manifest.txt). Throws IoError.
RunManifest write_result(const ScenarioResult& result, std::size_t level_count,
                         const std::string& config_path, const std::string& outdir,
                         std::uint64_t config_hash, double wall_seconds);

}  // namespace clocksim

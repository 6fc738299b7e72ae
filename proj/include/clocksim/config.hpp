#pragma once

#include <cstdint>
#include <string>

#include "clocksim/constants.hpp"
#include "clocksim/scenario.hpp"

namespace clocksim {

/// Parses the section-based key = value config text into a validated
/// ScenarioConfig. Sections: [units] [clock] [potential] [grid] [evolution]
/// [scenario]. Lists are bracketed and comma-separated; complex amplitudes
/// are flat "re,im" pairs. Unknown sections or keys are rejected with a
/// ParseError carrying line and column; violated invariants surface as
/// ValidationError naming the invariant.
ScenarioConfig parse_config(const std::string& text);

/// Parses a constants-only file (a [units] section).
Constants parse_constants_text(const std::string& text);

/// Canonical serialization of the validated config; whitespace- and
/// comment-insensitive by construction.
std::string canonical_config_string(const ScenarioConfig& cfg);

/// FNV-1a hash of the canonical serialization. Changes iff a semantic field
/// changes.
std::uint64_t config_hash(const ScenarioConfig& cfg);

}  // namespace clocksim

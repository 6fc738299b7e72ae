#pragma once

#include <ostream>

namespace clocksim {

/// Runs the fast invariant suite (cancellation identity, unitarity, level
/// population conservation, reversibility, composition, free-reference
/// fidelity, eigenvector orthonormality, CSV round-trip), printing one
/// pass/fail line per check. Returns true when everything passed.
bool run_selftest(std::ostream& out);

}  // namespace clocksim

#pragma once

namespace clocksim {

/// Execution policy for the data-parallel kernels. The serial path is the
/// reference implementation; the parallel path must produce bitwise-identical
/// results (work items are independent, reductions keep a fixed order).
enum class Exec {
    serial,
    parallel,
};

/// Parallel when built with OpenMP, serial otherwise.
Exec default_exec();

/// Worker count the parallel policy would use (1 without OpenMP).
int max_threads();

}  // namespace clocksim

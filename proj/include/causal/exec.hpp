#pragma once

namespace causal {

/// Execution mode for the data-parallel kernels. Parallel runs use OpenMP
/// when available and must produce output identical to Serial; the serial
/// paths are kept as reference implementations and exercised by tests.
enum class Exec { Serial, Parallel };

}  // namespace causal

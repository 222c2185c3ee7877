#pragma once

namespace purerec {

// Selects between the OpenMP kernel and the serial reference loop. Both
// produce bit-identical exact results; the serial path exists for testing
// and benchmarking.
enum class ExecPolicy { Serial, Parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace purerec

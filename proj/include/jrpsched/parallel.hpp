#pragma once

namespace jrpsched {

// Kernels that have an OpenMP variant keep the serial loop as the reference
// implementation; both must produce identical results.
enum class Execution { serial, openmp };

// Number of OpenMP worker threads the runtime would use (1 without OpenMP).
int max_workers();

} // namespace jrpsched

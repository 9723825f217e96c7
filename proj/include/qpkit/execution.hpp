#pragma once

namespace qpkit {

// Kernels that have an OpenMP path keep the plain loop as a reference
// implementation; results are identical (and identically ordered) either way.
enum class Execution { Serial, Parallel };

// Number of OpenMP threads available, 1 when built without OpenMP.
int parallel_threads();

}  // namespace qpkit

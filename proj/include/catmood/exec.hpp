#pragma once

namespace catmood {

// Sweep execution policy. Serial is the reference path used by the
// consistency tests; Parallel runs the same per-interface kernels under
// OpenMP. Interface writes are disjoint, so both produce identical bits.
enum class Exec { Serial, Parallel };

}  // namespace catmood

#pragma once

namespace cylq {

// Selects between the OpenMP kernels and the serial reference kernels they
// are tested against. Both produce identical results.
enum class Exec { serial, parallel };

// Thread budget for parallel kernels. Reads CYLQ_THREADS once; 0 or unset
// means the OpenMP runtime default.
int worker_threads();

// Overrides the thread budget for the rest of the process (0 = auto).
void set_worker_threads(int n);

}  // namespace cylq

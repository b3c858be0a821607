#pragma once

namespace chebylie {

/// Number of OpenMP workers used by the parallel kernels. Defaults to the
/// available parallelism; 1 forces the serial code paths.
int worker_count();
void set_worker_count(int workers);

/// Applies CHEBYLIE_WORKERS from the environment if it is set to a positive
/// integer. Returns the resulting worker count.
int configure_workers_from_env();

}  // namespace chebylie

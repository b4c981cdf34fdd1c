#pragma once

namespace bidensity {

/// Worker count the kernels may use: OpenMP's maximum, capped by the
/// BIDENSITY_THREADS environment variable when set. Always >= 1.
int thread_cap();

/// Applies the BIDENSITY_THREADS cap process-wide. Entry points (CLI, test
/// mains) call this once; all kernels produce bit-identical results at any
/// thread count, so skipping it only affects speed.
void apply_thread_cap_from_env();

}  // namespace bidensity

#pragma once

namespace hardychain {

/// Number of OpenMP threads the parallel kernels may use: the runtime's
/// maximum, capped by the HARDY_CHAIN_THREADS environment variable when set
/// to a positive integer. Always >= 1.
int effective_threads();

}  // namespace hardychain

#pragma once

#include <cstdint>
#include <functional>

namespace pauliwalk {

/// Worker cap for stepping kernels. PAULIWALK_THREADS=0 or unset means one
/// worker per hardware thread.
int thread_cap();

/// Runs body(begin, end) over disjoint chunks of [0, n). Chunks are
/// contiguous, so each worker writes a disjoint destination range. Stays
/// serial when n is below min_chunk.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body,
                  std::int64_t min_chunk = 16384);

}  // namespace pauliwalk

// Deterministic data-parallel helper. Work items write to preallocated
// slots, so results do not depend on scheduling; MSGAIN_THREADS caps the
// worker count.
#pragma once

#include <cstddef>
#include <functional>

namespace msgain {

std::size_t worker_count();

/// Runs body(begin, end) over a contiguous partition of [0, n).
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace msgain

#pragma once

#include <cstddef>
#include <functional>

namespace epithresh {

/// Worker count used when a caller passes 0: the EPITHRESH_THREADS
/// environment variable if set to a positive integer, otherwise the hardware
/// concurrency.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = default).
/// Each index runs at most once, and exactly once when nothing throws. After a
/// call throws, indices not yet started are skipped; once all workers stop,
/// the exception of the lowest failed index is rethrown.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace epithresh

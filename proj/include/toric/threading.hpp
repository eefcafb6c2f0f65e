#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace toric::parallel {

/// Process-wide worker budget. All parallel code paths in the library
/// respect it. Defaults to the hardware concurrency; may be overridden
/// programmatically or via the TDF_THREADS environment variable.
int worker_budget();
void set_worker_budget(int n);

/// Reset to the default (TDF_THREADS if set, else hardware concurrency).
void reset_worker_budget();

/// Split [0, count) into at most worker_budget() contiguous chunks and run
/// `work(begin, end, chunk_index)` on each, possibly concurrently. Chunk
/// boundaries depend only on `count` and the budget, and callers receive
/// per-chunk results indexed by chunk, so any reduction done in chunk order
/// is independent of scheduling.
void run_chunked(std::size_t count,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& work);

/// Number of chunks run_chunked will use for `count` items.
std::size_t chunk_count(std::size_t count);

}  // namespace toric::parallel

#pragma once

#include <cstddef>
#include <functional>

namespace br {

// Thread count resolution: explicit request > BORDERRANK_THREADS env var >
// hardware concurrency.  requested == 0 means "not specified".
unsigned resolve_threads(unsigned requested = 0);

// Run fn(begin, end) over [0, n) split into contiguous chunks, one per worker.
// Workers receive disjoint ranges; any reduction must be done by the caller
// over per-chunk results (in chunk order, for determinism).
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

// Convenience: parallel loop over items, fn(i).
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

} // namespace br

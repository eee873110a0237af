#pragma once

#include <cstddef>
#include <functional>

namespace tanvar {

/// Worker count used by the parallel loops below. Defaults to 1.
void set_thread_count(std::size_t threads);
std::size_t thread_count();

/// Runs body(chunk, begin, end) over [0, n) split into thread_count()
/// contiguous chunks. Chunk boundaries depend only on n and the thread count.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

/// Number of chunks parallel_chunks will use for n items.
std::size_t chunk_count(std::size_t n);

} // namespace tanvar

#pragma once

#include <cstddef>
#include <functional>

namespace thetafay {

/// Worker count: THETA_FAY_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// body(chunk, begin, end). Chunk boundaries depend only on n and the worker
/// count, so callers that reduce per-chunk results in chunk order get the same
/// answer for any worker count when the reduction is exact.
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& body);

/// parallel_chunks with one chunk per worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t begin, std::size_t end)>& body);

}  // namespace thetafay

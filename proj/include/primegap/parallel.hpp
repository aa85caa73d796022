#pragma once

#include <functional>

#include "primegap/common.hpp"

namespace primegap {

// Fixed chunk width shared by every chunked loop and reduction. Chunk
// boundaries depend only on the interval, never on the worker count, and
// partial results are folded in chunk order, so output bits are identical
// for any thread count.
inline constexpr u64 kChunkWidth = 8192;

// Process-wide worker bound (default 1). The CLI exposes it as --threads.
void set_worker_threads(unsigned n);
unsigned worker_threads();

// Runs body(chunk_lo, chunk_hi_inclusive, chunk_index) over [lo, hi] split
// into kChunkWidth-wide chunks. Bodies for different chunks must be
// independent.
void parallel_for_chunks(u64 lo, u64 hi,
                         const std::function<void(u64, u64, std::size_t)>& body);

// Chunked compensated sum of term(n) for n in [lo, hi]: each chunk gets its
// own KahanSum, chunk totals are folded in order through another KahanSum.
double chunked_sum(u64 lo, u64 hi, const std::function<double(u64)>& term);

}  // namespace primegap

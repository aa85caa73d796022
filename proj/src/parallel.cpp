#include "primegap/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace primegap {

namespace {
unsigned g_workers = 1;
}

void set_worker_threads(unsigned n) { g_workers = n == 0 ? 1 : n; }
unsigned worker_threads() { return g_workers; }

void parallel_for_chunks(u64 lo, u64 hi,
                         const std::function<void(u64, u64, std::size_t)>& body) {
    if (hi < lo) return;
    const u64 span = hi - lo + 1;
    const std::size_t nchunks = static_cast<std::size_t>((span + kChunkWidth - 1) / kChunkWidth);
    auto run_chunk = [&](std::size_t ci) {
        const u64 a = lo + static_cast<u64>(ci) * kChunkWidth;
        const u64 b = std::min(hi, a + kChunkWidth - 1);
        body(a, b, ci);
    };
    const unsigned nt = worker_threads();
    if (nt <= 1 || nchunks <= 1) {
        for (std::size_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t ci = next.fetch_add(1);
                if (ci >= nchunks) return;
                run_chunk(ci);
            }
        });
    }
    for (auto& th : pool) th.join();
}

double chunked_sum(u64 lo, u64 hi, const std::function<double(u64)>& term) {
    if (hi < lo) return 0.0;
    const u64 span = hi - lo + 1;
    const std::size_t nchunks = static_cast<std::size_t>((span + kChunkWidth - 1) / kChunkWidth);
    std::vector<double> partial(nchunks, 0.0);
    parallel_for_chunks(lo, hi, [&](u64 a, u64 b, std::size_t ci) {
        KahanSum acc;
        for (u64 n = a;; ++n) {
            acc.add(term(n));
            if (n == b) break;
        }
        partial[ci] = acc.value();
    });
    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

}  // namespace primegap

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace wreathcount {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Deterministic parallel map over [0, n): fixed chunking independent of the
/// worker count; fn(chunk_index, begin, end) writes into caller-owned slots,
/// so merged output never depends on scheduling.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t chunk_size, int workers, Fn&& fn) {
    if (n == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    workers = resolve_workers(workers);
    if (workers <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        while (true) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    int nthreads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), nchunks));
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

} // namespace wreathcount

#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace qcs {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs f(i) for i in [0, n).  f must be pure up to writes into per-index
// slots, so results do not depend on how indices land on threads; callers
// reduce the slots afterwards in a fixed order.
template <class F>
void parallel_for_index(int64_t n, unsigned threads, F&& f) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int64_t> next{0};
    const int64_t grain = std::max<int64_t>(1, n / (int64_t(threads) * 16));
    auto worker = [&] {
        for (;;) {
            int64_t begin = next.fetch_add(grain, std::memory_order_relaxed);
            if (begin >= n) return;
            int64_t end = std::min(n, begin + grain);
            for (int64_t i = begin; i < end; ++i) f(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace qcs

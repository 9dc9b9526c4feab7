#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace favard {

// Worker count resolution: explicit request > FAVARD_LAB_THREADS > hardware.
inline int resolve_workers(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FAVARD_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count) across workers.  Each index writes only its
// own output slot, so results are identical for any worker count; callers do
// the final reduction in index order.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t nw = std::min<std::size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        const std::size_t begin = count * w / nw;
        const std::size_t end = count * (w + 1) / nw;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace favard

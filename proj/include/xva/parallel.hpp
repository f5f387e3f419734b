#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace xva {

inline unsigned resolve_workers(unsigned workers) noexcept {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Invokes body(begin, end) over a contiguous partition of [0, n). Bodies must
// write only to disjoint preallocated slots; with per-index work that is a
// pure function of the index, results cannot depend on the worker count.
// workers == 0 selects the hardware concurrency.
template <typename Body>
void parallel_for(std::size_t n, unsigned workers, const Body& body) {
    workers = resolve_workers(workers);
    if (workers <= 1 || n < 4096) {
        if (n > 0) body(std::size_t{0}, n);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::size_t base = n / chunks;
    const std::size_t extra = n % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t end = begin + base + (c < extra ? 1 : 0);
        pool.emplace_back([&body, begin, end] { body(begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace xva

#pragma once

// Optional internal parallelism, capped by the DEC2D_THREADS environment
// variable (default 1). Work is split into contiguous index blocks with one
// writer per block, so results are bitwise identical at any thread count.

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dec2d {

inline unsigned thread_count() {
    static const unsigned cached = [] {
        const char* env = std::getenv("DEC2D_THREADS");
        if (!env) return 1u;
        const long v = std::strtol(env, nullptr, 10);
        if (v <= 1) return 1u;
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        return std::min(static_cast<unsigned>(v), hw);
    }();
    return cached;
}

template <typename Fn>
inline void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned threads = thread_count();
    if (threads <= 1 || n < 2048) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t block = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * block;
        const std::size_t end = std::min(n, begin + block);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace dec2d

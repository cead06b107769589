#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace matdist {

inline unsigned default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Splits [begin, end) into contiguous chunks, one worker thread per chunk.
/// `body(chunk_index, lo, hi)` must only touch state owned by its chunk;
/// callers merge per-chunk results afterwards in chunk order, which keeps
/// every reduction byte-stable regardless of thread count (all reductions in
/// this library are exact and commutative).
inline void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    if (threads <= 1 || end - begin < 2) {
        body(0, begin, end);
        return;
    }
    const std::uint64_t total = end - begin;
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned c = 0; c < threads; ++c) {
        const std::uint64_t lo = begin + total * c / threads;
        const std::uint64_t hi = begin + total * (c + 1) / threads;
        pool.emplace_back([&body, c, lo, hi] { body(c, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace matdist

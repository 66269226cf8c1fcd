#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace minorsum {

/// Number of chunks parallel_chunks will use; callers size their partial
/// accumulators with this.
inline std::uint64_t chunk_count(std::uint64_t total, int jobs) {
    if (jobs < 1) throw std::invalid_argument("parallel_chunks: jobs must be >= 1");
    return std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total ? total : 1);
}

/// Splits [0, total) into at most `jobs` contiguous chunks and runs
/// fn(chunk_index, lo, hi) for each, in parallel when jobs > 1. Results must
/// be combined by the caller in chunk order so that partitioning cannot
/// change any reported value.
template <class F>
void parallel_chunks(std::uint64_t total, int jobs, F&& fn) {
    const std::uint64_t chunks = chunk_count(total, jobs);
    if (chunks <= 1) {
        fn(std::size_t{0}, std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t base = total / chunks;
    const std::uint64_t extra = total % chunks;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
    std::uint64_t lo = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t hi = lo + base + (c < extra ? 1 : 0);
        pool.emplace_back([&fn, &errors, c, lo, hi] {
            try {
                fn(static_cast<std::size_t>(c), lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(c)] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace minorsum

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace lnde {

/// Resolves a --jobs style request; 0 means one worker per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    return jobs;
}

/// Splits [0, total) into contiguous chunks, runs `fn(begin, end)` on each in
/// its own thread and returns the per-chunk results in chunk order.
template <typename R, typename F>
std::vector<R> parallel_chunks(std::uint64_t total, unsigned jobs, F &&fn) {
    jobs = resolve_jobs(jobs);
    std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total));
    std::vector<R> results(chunks);
    if (chunks == 1) {
        results[0] = fn(std::uint64_t{0}, total);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; c++) {
        std::uint64_t begin = total * c / chunks;
        std::uint64_t end = total * (c + 1) / chunks;
        workers.emplace_back([&results, &fn, c, begin, end] { results[c] = fn(begin, end); });
    }
    for (auto &w : workers) {
        w.join();
    }
    return results;
}

}  // namespace lnde

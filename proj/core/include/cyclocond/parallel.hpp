#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclocond {

/// Number of workers to use when the caller asks for "as many as available".
inline unsigned availableParallelism()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(worker, i) for every i in [0, count) on up to `threads`
/// workers. Indices are handed out dynamically; the first exception thrown
/// by any worker is rethrown after all workers join.
template <typename F>
void parallelFor(std::size_t count, unsigned threads, F&& body)
{
    threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(0u, i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex errorMutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (;;) {
                    if (failed.load(std::memory_order_relaxed))
                        return;
                    const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= count)
                        return;
                    try {
                        body(w, i);
                    } catch (...) {
                        std::lock_guard lock(errorMutex);
                        if (!error)
                            error = std::current_exception();
                        failed = true;
                    }
                }
            });
        }
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace cyclocond

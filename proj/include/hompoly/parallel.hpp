#ifndef HOMPOLY_PARALLEL_HPP
#define HOMPOLY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hompoly {

/// Default worker count: HOMPOLY_THREADS if set and positive, else the core count.
std::size_t default_threads();

/**
 * Calls fn(i) for i in [0, count) on up to `threads` workers. Each index
 * runs exactly once; results must be written to slot i so the outcome does
 * not depend on the schedule. The first exception is rethrown.
 */
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace hompoly

#endif // HOMPOLY_PARALLEL_HPP

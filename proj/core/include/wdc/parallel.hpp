#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace wdc {

// Runs fn(i) for each i in [0, count), distributing indices over worker
// threads.  Callers keep determinism by writing results into per-index
// slots.  The first exception thrown by any task is rethrown after all
// workers join.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn)
{
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::thread::hardware_concurrency();
    if (workers < 1)
        workers = 1;
    if (workers > count)
        workers = count;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace wdc

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tamekernel {

/// Worker cap: TAMEKERNEL_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

namespace detail {
bool& inside_parallel_region();
}

/// Runs body(i) for i in [0, count). Nested calls run serially on the calling thread.
/// The first exception thrown by any body is rethrown after all workers join.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    unsigned workers = worker_count();
    if (detail::inside_parallel_region() || workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        detail::inside_parallel_region() = true;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        }
        detail::inside_parallel_region() = false;
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
        run();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace tamekernel

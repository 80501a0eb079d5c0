#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zetalab {

// Worker count: ZETALAB_THREADS when set (must be a positive integer, InputError otherwise),
// else std::thread::hardware_concurrency().
std::size_t thread_count();

// Calls body(i) for i in [0, n) on up to `threads` workers (0 = thread_count()). Work items
// must write only to their own slot. If any call throws, the exception of the lowest failing
// index is rethrown after all workers finish, so failures are schedule-independent.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t threads = 0) {
    if (threads == 0) {
        threads = thread_count();
    }
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = n;
    std::exception_ptr error;

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace zetalab

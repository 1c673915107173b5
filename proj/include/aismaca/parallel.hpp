// Minimal index-parallel loop. Work items write to their own slots, so
// results never depend on the worker count.
#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace aismaca {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    const std::size_t n_threads = std::min(workers, count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        threads.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (std::thread& t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace aismaca

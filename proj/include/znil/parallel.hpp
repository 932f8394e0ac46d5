#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace znil {

// Runs fn(i) for every i in [begin, end) across hardware threads. fn must be
// safe to call concurrently for distinct i; the first exception thrown by
// any call is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    if (end <= begin) return;
    std::uint64_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<std::uint64_t>(workers, end - begin);
    if (workers == 1) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{begin};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::uint64_t i; (i = next.fetch_add(1)) < end;) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(end);  // drain remaining work
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace znil

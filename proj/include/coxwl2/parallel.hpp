#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace coxwl2 {

/// Worker count from COXWL2_THREADS, defaulting to 1.
inline int thread_count_from_env() {
    const char* env = std::getenv("COXWL2_THREADS");
    if (env == nullptr) {
        return 1;
    }
    try {
        int n = std::stoi(env);
        return n > 0 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled exactly once, so writing to slot i of a preallocated vector
/// gives schedule-independent results. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) {
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace coxwl2

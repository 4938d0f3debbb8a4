#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rda {

// Static chunked parallel map over [0, n). Results must be written to
// per-index slots so the outcome is independent of the schedule.
inline void parallel_for(int n, int n_threads,
                         const std::function<void(int)>& body) {
    if (n_threads <= 1 || n < 2) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    n_threads = std::min(n_threads, n);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(n_threads);
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (int i = t; i < n; i += n_threads) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Thread count from the RDA_THREADS environment variable (default 1).
int env_thread_count();

}  // namespace rda

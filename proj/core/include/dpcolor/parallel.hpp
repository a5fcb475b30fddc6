#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dpc {

/// 0 means one worker per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0)
        return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(worker_id) on `workers` threads and joins them. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void run_workers(unsigned workers, Body &&body) {
    workers = resolve_workers(workers);
    if (workers == 1) {
        body(0U);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto &t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace dpc

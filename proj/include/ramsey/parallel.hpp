#ifndef RAMSEY_PARALLEL_HPP
#define RAMSEY_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey {

/// Worker count: explicit jobs, else RAMSEY_JOBS env var, else hardware.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("RAMSEY_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(task) for task in [0, task_count) on `jobs` workers, work-stealing
/// over an atomic counter. fn must be safe to call concurrently; result
/// ordering/reduction is the caller's job.
inline void parallel_for(long long task_count, int jobs,
                         const std::function<void(long long)>& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || task_count <= 1) {
        for (long long t = 0; t < task_count; ++t) fn(t);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (;;) {
                long long t = next.fetch_add(1);
                if (t >= task_count || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    failed = true;
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace ramsey

#endif

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace paving {

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Run fn(task_index) for every index in [0, num_tasks). Workers pull indices
// from a shared counter; results must be written to per-index slots so the
// merged outcome is independent of scheduling.
template <typename Fn>
void parallel_for_tasks(std::size_t num_tasks, int threads, Fn&& fn) {
    if (threads <= 1 || num_tasks <= 1) {
        for (std::size_t i = 0; i < num_tasks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= num_tasks) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<std::size_t>(threads, num_tasks);
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace paving

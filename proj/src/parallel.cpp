#include "raclab/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace raclab {

std::size_t worker_count() {
    if (const char* env = std::getenv("RAC_LAB_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<std::size_t>(parsed);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_tasks(std::size_t task_count, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(worker_count(), task_count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < task_count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < task_count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace raclab

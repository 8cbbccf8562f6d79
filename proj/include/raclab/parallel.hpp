#pragma once

#include <cstddef>
#include <functional>

namespace raclab {

// Worker count: RAC_LAB_THREADS when set (clamped to >= 1), otherwise
// hardware concurrency.
std::size_t worker_count();

// Runs fn(task_index) for task_index in [0, task_count) across workers.
// Static assignment; caller owns any reduction and must keep it
// deterministic (reduce by task index, never completion order).
void parallel_tasks(std::size_t task_count, const std::function<void(std::size_t)>& fn);

}  // namespace raclab

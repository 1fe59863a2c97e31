#pragma once

#include <cstddef>
#include <functional>

namespace khr {

/// Worker count: KHR_THREADS if set (>= 1), else hardware concurrency.
int thread_count();
/// Overrides the worker count for this process (0 restores the default).
void set_thread_count(int n);

/// Runs body(i) for i in [0, n) on up to thread_count() threads. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace khr

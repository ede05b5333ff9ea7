#pragma once

#include <cstddef>
#include <functional>

namespace wectkit {

// Number of worker threads used by parallel_for. Defaults to the
// WECTKIT_THREADS environment variable, falling back to the hardware
// concurrency.
int thread_budget();
void set_thread_budget(int threads);

namespace detail {
void parallel_for_impl(std::size_t begin, std::size_t end,
                       const std::function<void(std::size_t)>& body);
}

// Runs body(i) for i in [begin, end) across the thread budget. Nested calls
// run serially in the calling worker. The first exception thrown by body is
// rethrown after all workers finish.
template <typename F>
void parallel_for(std::size_t begin, std::size_t end, F&& body) {
    detail::parallel_for_impl(begin, end, std::function<void(std::size_t)>(std::forward<F>(body)));
}

}  // namespace wectkit

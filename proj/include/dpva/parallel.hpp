#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace dpva {

enum class Exec { Serial, Parallel };

// Runs f(i) for i in [0,n). Results must be written to per-index slots so the
// merge order never depends on scheduling. The first exception is rethrown.
template <class F>
void for_each_index(std::size_t n, Exec ex, F&& f) {
    if (ex == Exec::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr err;
    std::mutex m;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> g(m);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

int worker_threads();

}  // namespace dpva

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gendawson::detail {

/// Evaluates fn(i) for i in [0, n) on a few worker threads. Results come back
/// in index order; an exception from fn(i) is stored in errors[i].
template <class R, class Fn>
void parallel_map(std::size_t n, Fn fn, std::vector<R>& results, std::vector<std::exception_ptr>& errors) {
    results.assign(n, R{});
    errors.assign(n, nullptr);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace gendawson::detail

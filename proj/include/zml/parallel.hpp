#ifndef ZML_PARALLEL_HPP
#define ZML_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace zml {

// Thread count requested through ZML_THREADS; 1 when unset or invalid.
inline unsigned threads_from_env()
{
    const char* raw = std::getenv("ZML_THREADS");
    if (raw == nullptr) {
        return 1;
    }
    try {
        const long v = std::stol(raw);
        return v >= 1 ? static_cast<unsigned>(std::min<long>(v, 1024)) : 1U;
    } catch (const std::exception&) {
        return 1;
    }
}

// Runs body(i) for i in [0, n). Work is split into contiguous chunks, so any
// body that writes only to slot i produces results independent of the
// thread count. The first exception thrown by a worker is rethrown.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body)
{
    if (n == 0) {
        return;
    }
    const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn)
{
    std::vector<T> out(n);
    parallel_for(n, threads, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace zml

#endif // ZML_PARALLEL_HPP

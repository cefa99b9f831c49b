#ifndef LSC_PARALLEL_HPP
#define LSC_PARALLEL_HPP

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace lsc {

/// Worker count resolution: 0 means "use the hardware", and the LSC_THREADS
/// environment variable caps whatever was requested.
inline std::size_t resolve_threads(std::size_t requested) {
    std::size_t n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LSC_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<std::size_t>(cap) < n)
            n = static_cast<std::size_t>(cap);
    }
    return n;
}

namespace detail {

/// Runs body(i) for i in [begin, end) over a static block partition.
/// body must not touch state shared across iterations; results are then
/// independent of the thread count.
template <class F>
void parallel_for(std::size_t begin, std::size_t end, std::size_t threads, F&& body) {
    const std::size_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min(threads, count);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail
}  // namespace lsc

#endif  // LSC_PARALLEL_HPP

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace fhs {

namespace {
int g_threads = []() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}();
} // namespace

void set_thread_count(int n) { g_threads = std::max(1, n); }
int thread_count() { return g_threads; }

double chunked_sum(std::size_t n, std::size_t chunk,
                   const std::function<double(std::size_t, std::size_t)>& fn) {
    if (n == 0) return 0.0;
    chunk = std::max<std::size_t>(1, chunk);
    std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);

    int workers = std::min<int>(g_threads, static_cast<int>(nchunks));
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            partial[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                partial[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Serial combination in chunk order keeps the result thread-count independent.
    double acc = 0.0;
    for (double v : partial) acc += v;
    return acc;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    int workers = std::min<int>(g_threads, static_cast<int>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

} // namespace fhs

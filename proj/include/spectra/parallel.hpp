#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace spectra {

// Runs fn(i) for i in [0, n).  threads <= 1 runs serially; threads == 0 uses
// the hardware concurrency.  Work is split into contiguous chunks and each
// index writes only its own slot, so results do not depend on thread count.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc ? static_cast<int>(hc) : 1;
    }
    std::size_t nthreads = static_cast<std::size_t>(threads);
    if (nthreads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (nthreads > n) nthreads = n;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t lo = n * t / nthreads, hi = n * (t + 1) / nthreads;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace spectra

#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace cvschmidt::detail {

/// Kahan compensated summation; works elementwise for std::complex too.
template <typename T>
class KahanSum {
  public:
    void add(const T& x) {
        const T y = x - c_;
        const T t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    const T& value() const { return s_; }

  private:
    T s_{};
    T c_{};
};

/// Runs fn(i) for i in [0, n) on up to `threads` workers, contiguous blocks
/// per worker. Callers own any ordering-sensitive reduction: workers must
/// only write to per-index slots. Exceptions are rethrown on the caller.
inline void parallel_rows(size_t n, int threads, const std::function<void(size_t)>& fn) {
    const size_t nthreads =
        std::min<size_t>(std::max(threads, 1), std::max<size_t>(n, 1));
    if (nthreads <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    const size_t chunk = (n + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
        const size_t lo = t * chunk;
        const size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, t, lo, hi] {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace cvschmidt::detail

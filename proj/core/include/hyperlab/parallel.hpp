#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace hyperlab {

/// Smallest i in [first, last) with pred(i) true, scanning with `threads`
/// workers over contiguous chunks. The result does not depend on the thread
/// count: chunks are merged by minimum index.
template <class Pred>
std::optional<std::size_t> first_index(std::size_t first, std::size_t last, unsigned threads, Pred pred) {
    if (first >= last) {
        return std::nullopt;
    }
    const std::size_t count = last - first;
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, count);
    if (workers == 1) {
        for (std::size_t i = first; i < last; ++i) {
            if (pred(i)) {
                return i;
            }
        }
        return std::nullopt;
    }

    std::vector<std::optional<std::size_t>> found(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = first + w * chunk;
            const std::size_t hi = std::min(last, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) {
                        if (pred(i)) {
                            found[w] = i;
                            return;
                        }
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (std::size_t w = 0; w < workers; ++w) {
        if (errors[w]) {
            std::rethrow_exception(errors[w]);
        }
        if (found[w]) {
            return found[w];
        }
    }
    return std::nullopt;
}

/// out[i] = fn(i) for i in [0, n), computed by `threads` workers.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
    std::vector<T> out(n);
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) {
                        out[i] = fn(i);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace hyperlab

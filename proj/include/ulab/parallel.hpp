#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace ulab {

// Evaluates fn(i) for i in [0, count) on up to `threads` workers and returns
// the results indexed by i. Each index is computed exactly once, so the output
// does not depend on the worker count.
template <class Fn>
auto run_indexed(std::size_t count, unsigned threads, Fn fn) {
    using Result = decltype(fn(std::size_t{0}));
    static_assert(!std::is_same_v<Result, bool>, "std::vector<bool> is not safe for concurrent writes");
    std::vector<Result> out(count);
    unsigned workers = std::max(1u, threads);
    if (workers > count) workers = static_cast<unsigned>(std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    std::size_t begin = count * w / workers;
                    std::size_t end = count * (w + 1) / workers;
                    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace ulab

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace eigenprime {

/// Splits [begin, end) into at most `threads` contiguous chunks, evaluates
/// `chunk(lo, hi)` for each and adds the partial results in chunk order.
/// Partial results are exact integers, so the total does not depend on the
/// thread count.
template <typename T, typename Fn>
T parallel_sum(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn&& chunk) {
    if (end <= begin) return T{};
    std::uint64_t span = end - begin;
    std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, span);
    if (workers == 1) return chunk(begin, end);

    std::vector<T> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t lo = begin + span * w / workers;
        std::uint64_t hi = begin + span * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            try {
                partial[w] = chunk(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    T total{};
    for (auto& p : partial) total += p;
    return total;
}

}  // namespace eigenprime

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ringlab {

/// Least index in [begin, end) where pred returns false, or end if none.
/// Workers pull fixed-size chunks and skip chunks past the current best
/// failing index, so the answer is independent of worker count.
template <class Pred>
std::uint64_t least_failing_index(std::uint64_t begin, std::uint64_t end, int threads,
                                  Pred&& pred) {
    if (begin >= end) return end;
    if (threads <= 1 || end - begin < 2048) {
        for (std::uint64_t i = begin; i < end; ++i)
            if (!pred(i)) return i;
        return end;
    }
    constexpr std::uint64_t kChunk = 1024;
    std::atomic<std::uint64_t> next{begin};
    std::atomic<std::uint64_t> best{end};
    auto worker = [&] {
        for (;;) {
            std::uint64_t lo = next.fetch_add(kChunk);
            if (lo >= end || lo >= best.load(std::memory_order_relaxed)) return;
            std::uint64_t hi = lo + kChunk < end ? lo + kChunk : end;
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (i >= best.load(std::memory_order_relaxed)) break;
                if (!pred(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return best.load();
}

/// Collects all indices in [begin, end) satisfying pred, in ascending order.
/// Static partition per worker; per-worker results are concatenated in
/// partition order, so output is sorted and worker-count independent.
template <class Pred>
std::vector<std::uint32_t> collect_indices(std::uint64_t begin, std::uint64_t end, int threads,
                                           Pred&& pred) {
    std::vector<std::uint32_t> out;
    if (begin >= end) return out;
    if (threads <= 1 || end - begin < 4096) {
        for (std::uint64_t i = begin; i < end; ++i)
            if (pred(i)) out.push_back(static_cast<std::uint32_t>(i));
        return out;
    }
    const int nt = threads;
    std::vector<std::vector<std::uint32_t>> parts(static_cast<std::size_t>(nt));
    std::vector<std::thread> pool;
    const std::uint64_t span = end - begin;
    for (int t = 0; t < nt; ++t) {
        std::uint64_t lo = begin + span * static_cast<std::uint64_t>(t) / nt;
        std::uint64_t hi = begin + span * (static_cast<std::uint64_t>(t) + 1) / nt;
        pool.emplace_back([&, t, lo, hi] {
            auto& dst = parts[static_cast<std::size_t>(t)];
            for (std::uint64_t i = lo; i < hi; ++i)
                if (pred(i)) dst.push_back(static_cast<std::uint32_t>(i));
        });
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace ringlab

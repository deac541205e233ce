#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace ringlab {

/// Shared run configuration. Caps are explicit errors when exceeded, never
/// silent truncation; results must be identical for any worker count.
struct RunConfig {
    std::uint64_t enumeration_cap = 1'000'000;
    std::uint64_t socle_cap = 4096;
    int threads = 0;  // 0 = resolve from RINGLAB_THREADS or hardware
    bool slow = false;

    int resolved_threads() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("RINGLAB_THREADS")) {
            int t = std::atoi(env);
            if (t > 0) return t;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }
};

}  // namespace ringlab

#pragma once

#include <omp.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace mg {

// Global worker-count knob for the OpenMP kernels; 1 selects the serial
// reference path. Results are required to be identical either way (exact
// rational reduction is associative, and all merges are ordered).
int& worker_count();

// Run fn(task, thread_slot) for task in [0, n); with threads == 1 this is a
// plain loop, otherwise an OpenMP parallel for with dynamic scheduling.
void run_tasks(int64_t n, const std::function<void(int64_t, int)>& fn, int threads = 0);

int effective_threads(int threads);

// xorshift-style deterministic RNG used for seeded sampling in tests and the
// CLI; independent of any global state.
struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [1, hi]
    long positive(long hi) { return static_cast<long>(next() % static_cast<uint64_t>(hi)) + 1; }
};

}  // namespace mg

// Benchmark comparing the serial reference path against the OpenMP kernels.

#include <chrono>
#include <cstdio>

#include "moebius/enumerate.hpp"
#include "moebius/lattice.hpp"
#include "moebius/parallel.hpp"
#include "moebius/quasipoly.hpp"

using namespace mg;

namespace {

double time_once(const char* name, int threads, const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-34s threads=%-2d %8.3fs\n", name, threads, secs);
    return secs;
}

}  // namespace

int main(int argc, char** argv) {
    int chi = argc > 1 ? std::atoi(argv[1]) : 2;
    int threads = effective_threads(0);

    for (int t : {1, threads}) {
        EnumerateOptions opts;
        opts.threads = t;
        opts.fresh = true;
        time_once("enumerate_unlabelled", t, [&] { enumerate_unlabelled(chi, opts); });
        if (t == threads && threads == 1) break;
    }

    for (int t : {1, threads}) {
        worker_count() = t;
        time_once("count_direct sweep (1,2)", t, [&] {
            MonCache cache;
            for (long a = 1; a <= 8; ++a)
                for (long b = a; a + b <= 12; ++b) count_direct(2, 2, {a, b}, &cache);
        });
        if (threads == 1) break;
    }

    for (int t : {1, threads}) {
        worker_count() = t;
        time_once("reconstruct (1/2,3)", t, [&] {
            CountTable table;
            ReconstructOptions ro;
            reconstruct(1, 3, &table, ro);
        });
        if (threads == 1) break;
    }
    return 0;
}

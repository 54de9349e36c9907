#pragma once

#include <vector>

#include "moebius/bpoly.hpp"
#include "moebius/enumerate.hpp"
#include "moebius/graph.hpp"
#include "moebius/mon.hpp"

namespace mg {

using LVec = std::vector<long>;

// all positive integer solutions of A_G l = L, in deterministic order
std::vector<std::vector<long>> integral_metrics(const MoebiusGraph& g, const LVec& L);

// N_{g,n}(L;b) by direct enumeration over the inventory
BPoly count_direct(int two_g, int n, const LVec& L, MonCache* cache = nullptr,
                   const EnumerateOptions& opts = {});

// Remove the distinguished edge (or its whole lollipop), then smooth all
// two-valent vertices, lengths adding and twists adding mod 2.
struct TrimResult {
    MoebiusGraph graph;
    Metric metric;
    std::vector<int> flag_map;  // old flag -> new flag, -1 if the side vanished
    bool removed_lollipop = false;
};
TrimResult trim(const MoebiusGraph& g, int e, const Metric& m);

// weight of a ciliated root (depends on the root, not the cilium position)
enum class CiliatedCase { R, E, Dc, Dd };
std::pair<CiliatedCase, BPoly> classify_ciliated_root(const MoebiusGraph& g, int root_flag);

// N'_{g,n}(L;b), the ciliated refined lattice point count
BPoly ciliated_count(int two_g, int n, const LVec& L, MonCache* cache = nullptr,
                     const EnumerateOptions& opts = {});

inline long lsum(const LVec& L) {
    long s = 0;
    for (long x : L) s += x;
    return s;
}

}  // namespace mg

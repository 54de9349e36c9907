#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "moebius/bpoly.hpp"
#include "moebius/graph.hpp"

namespace mg {

// Measure of non-orientability. Graphs here are unlabelled and may have
// vertices of any valency; disconnected graphs are handled multiplicatively.

// all 4E roots (= flags), in flag order
std::vector<int> roots(const MoebiusGraph& g);

enum class WeightCase { Disconnecting, FaceMerge, FaceKeep, FaceSplitAligned, FaceSplitReversed };

// The ordering-and-orientation of all 2E ribbon sides induced by a root:
// order the root's face from the root; at the first ordered side whose
// opposite side is unordered, jump to the opposite side with reversed
// orientation and order its face; repeat.
struct FaceOrientation {
    std::vector<int> order;         // position -> flag
    std::vector<int> flag_of_side;  // side -> the flag it was traversed with
};
FaceOrientation face_orientation_order(const MoebiusGraph& g, int root_flag);

std::pair<WeightCase, BPoly> classify_root_removal(const MoebiusGraph& g, int root_flag);

inline BPoly weight_of(WeightCase c) {
    switch (c) {
        case WeightCase::FaceKeep:
        case WeightCase::FaceSplitReversed:
            return BPoly::b();
        default:
            return BPoly(1);
    }
}

struct MonCache {
    std::unordered_map<std::string, BPoly> values;
};

BPoly mon(const MoebiusGraph& g, const Metric& m, MonCache* cache = nullptr);
BPoly average_mon(const MoebiusGraph& g, MonCache* cache = nullptr);

}  // namespace mg

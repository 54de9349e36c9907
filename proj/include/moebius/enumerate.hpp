#pragma once

#include <map>
#include <vector>

#include "moebius/canonical.hpp"
#include "moebius/graph.hpp"

namespace mg {

struct InventoryEntry {
    MoebiusGraph graph;  // canonical representative, face-labelled
    Code code;
    int aut_order = 0;
    int num_edges = 0;
    bool orientable = false;
};

struct GraphInventory {
    int two_g = 0, n = 0;
    std::vector<InventoryEntry> entries;  // sorted by code
};

struct EnumerateOptions {
    int budget = 4;        // refuse 2g-2+n beyond this unless force is set
    bool force = false;
    uint64_t shuffle_seed = 0;  // nonzero: permute internal work order (result invariant)
    int threads = 0;            // 0: use worker_count()
    bool fresh = false;         // bypass the per-chi cache (test knob)
};

// All isomorphism classes of connected, valency >= 3, unlabelled Möbius
// graphs with |E| - |V| = chi, bucketed by type (2g, n). Computed once per
// chi and cached for the life of the process.
using UnlabelledBuckets = std::map<std::pair<int, int>, std::vector<MoebiusGraph>>;
const UnlabelledBuckets& enumerate_unlabelled(int chi, const EnumerateOptions& opts = {});

GraphInventory enumerate_graphs(int two_g, int n, const EnumerateOptions& opts = {});
GraphInventory trivalent_subset(const GraphInventory& inv);

}  // namespace mg

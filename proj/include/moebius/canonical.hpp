#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moebius/graph.hpp"

namespace mg {

// Canonical form of a face-labelled Möbius graph under dart relabelling and
// vertex flips: the lexicographic minimum, over all (start dart, reflection)
// seeds, of a breadth-first encoding that normalizes edge signs along the BFS
// tree. Two graphs are isomorphic (preserving rotations up to flips, signs up
// to flips, and face labels) iff their codes are equal; the number of seeds
// realizing the minimum is |Aut|.
using Code = std::vector<int32_t>;

struct EncodeScratch {
    std::vector<int> dart_label, edge_label, vertex_order, entry_dart;
    std::vector<int8_t> phi;
};

// Encoding from one seed. If edge_label_out is non-null it receives the
// edge relabelling (old edge -> canonical edge index).
Code encode_seed(const MoebiusGraph& g, int start_dart, int reflect, bool with_face_labels,
                 EncodeScratch& scratch, std::vector<int>* edge_label_out = nullptr);

Code canonical_code(const MoebiusGraph& g);             // face-label sensitive
Code canonical_code_unlabelled(const MoebiusGraph& g);  // labels erased

int automorphism_order(const MoebiusGraph& g);

// Key identifying the isomorphism class of an unlabelled metric Möbius graph:
// unlabelled code plus the lexicographically smallest canonical length vector
// over all minimal seeds, scaled so the minimum length is 1.
std::string canonical_metric_key(const MoebiusGraph& g, const Metric& m);

std::string code_bytes(const Code& c);

// True iff the seed (dart 0, no reflection) reproduces the graph's own dart
// numbering. Used by the enumerator to discard relabelled duplicates cheaply;
// signs are ignored (callers enumerate signs on non-tree edges only).
bool bfs_identity_canonical(const MoebiusGraph& g);

}  // namespace mg

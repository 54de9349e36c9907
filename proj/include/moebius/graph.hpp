#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moebius/rational.hpp"

namespace mg {

// A Möbius graph: a ribbon graph with a Z2 twist on each edge, considered up
// to vertex flips. Darts are edge ends (two per edge); each vertex carries a
// cyclic rotation of its darts.
struct MoebiusGraph {
    int num_vertices = 0;
    std::vector<int> vertex_of;  // dart -> vertex
    std::vector<int> rot_next;   // dart -> next dart in the rotation at its vertex
    std::vector<int> rot_prev;
    std::vector<int> mate;           // dart -> other end of the same edge
    std::vector<int> edge_of;        // dart -> edge index
    std::vector<int> edge_dart;      // edge -> its smaller dart
    std::vector<uint8_t> edge_sign;  // edge -> 0 untwisted, 1 twisted
    std::vector<int> face_labels;    // face index -> label in 1..n; empty if unlabelled

    int num_darts() const { return static_cast<int>(vertex_of.size()); }
    int num_edges() const { return static_cast<int>(edge_dart.size()); }
    bool is_loop(int e) const { return vertex_of[edge_dart[e]] == vertex_of[mate[edge_dart[e]]]; }
    int degree(int v) const;
    std::vector<int> darts_of_vertex(int v) const;

    // vertices: rotation lists of dart ids; pairing: list of dart pairs (edge
    // order = pairing order); signs: per edge.
    static MoebiusGraph build(const std::vector<std::vector<int>>& vertices,
                              const std::vector<std::pair<int, int>>& pairing,
                              const std::vector<uint8_t>& signs,
                              std::vector<int> face_labels = {});

    bool connected() const;
    void check_well_formed() const;  // throws std::invalid_argument
};

// ---- ribbon sides and face walks -------------------------------------------
//
// Faces are traced on flags. The flag 2*d + e stands for the walk state
// "traverse the edge of dart d away from the vertex of d, carrying local
// orientation e"; crossing a twisted edge toggles e. Each flag traverses one
// of the two ribbon sides of its edge in one of two directions, so flags are
// exactly the 4E roots of the MON construction, and the 2E undirected sides
// are flag pairs {f, flag_reverse(f)}.

inline int flag_of(int dart, int e) { return 2 * dart + e; }
inline int flag_dart(int f) { return f >> 1; }
inline int flag_orient(int f) { return f & 1; }

// face-successor permutation on flags
inline int flag_next(const MoebiusGraph& g, int f) {
    int d = flag_dart(f);
    int e = flag_orient(f) ^ g.edge_sign[g.edge_of[d]];
    int m = g.mate[d];
    return flag_of(e == 0 ? g.rot_next[m] : g.rot_prev[m], e);
}
inline int flag_prev(const MoebiusGraph& g, int f) {
    int d2 = flag_dart(f), e = flag_orient(f);
    int m = e == 0 ? g.rot_prev[d2] : g.rot_next[d2];
    int d = g.mate[m];
    return flag_of(d, e ^ g.edge_sign[g.edge_of[d]]);
}

// same undirected side, opposite traversal direction
inline int flag_reverse(const MoebiusGraph& g, int f) {
    int d = flag_dart(f);
    return flag_of(g.mate[d], flag_orient(f) ^ g.edge_sign[g.edge_of[d]] ^ 1);
}

// undirected side id in 0..2E-1; the orientation bit is read at the smaller dart
inline int side_of_flag(const MoebiusGraph& g, int f) {
    int d = flag_dart(f), e = flag_orient(f);
    int m = g.mate[d];
    if (d <= m) return 2 * g.edge_of[d] + e;
    return 2 * g.edge_of[d] + (e ^ g.edge_sign[g.edge_of[d]] ^ 1);
}

// the opposite side of the same edge, traversed in the opposite direction
// (the jump move of the face-orientation algorithm)
inline int flag_jump(const MoebiusGraph& g, int f) {
    int d = flag_dart(f);
    return flag_of(g.mate[d], flag_orient(f) ^ g.edge_sign[g.edge_of[d]]);
}

// ---- faces ----------------------------------------------------------------

struct FaceSystem {
    // face index -> cyclic list of sides (side = 2*edge + bit); faces are
    // indexed by their smallest flag, which makes the order deterministic
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of_side;
    int count() const { return static_cast<int>(faces.size()); }
};

FaceSystem trace_faces(const MoebiusGraph& g);

// (2g, n) with the genus doubled so half-integers stay exact
std::pair<int, int> graph_type(const MoebiusGraph& g);

MoebiusGraph flip(const MoebiusGraph& g, int v);

bool is_orientable(const MoebiusGraph& g);
// independent check via the orientation double cover (test oracle)
bool is_orientable_double_cover(const MoebiusGraph& g);

// n x E edge-face adjacency matrix; entry = number of sides of edge e on face i
std::vector<std::vector<int>> adjacency_matrix(const MoebiusGraph& g);

// ---- metrics ---------------------------------------------------------------

struct Metric {
    std::vector<Rat> lengths;  // edge -> positive length
    bool integral() const {
        for (const auto& l : lengths)
            if (!is_integer(l)) return false;
        return true;
    }
};

std::vector<Rat> face_perimeters(const MoebiusGraph& g, const Metric& m);

// ---- structural edits (used by MON and trimming) ---------------------------

// Remove a set of edges; surviving darts are renumbered compactly.
struct EdgeRemoval {
    MoebiusGraph graph;
    std::vector<int> dart_map;  // old dart -> new dart, -1 if removed
    std::vector<int> edge_map;  // old edge -> new edge, -1 if removed
    int map_flag(int f) const {
        int d = flag_dart(f);
        return dart_map[d] < 0 ? -1 : flag_of(dart_map[d], flag_orient(f));
    }
};
EdgeRemoval remove_edges(const MoebiusGraph& g, const std::vector<int>& edges);

int component_count(const MoebiusGraph& g);
std::vector<int> vertex_components(const MoebiusGraph& g);
// each component with its edge map (old edge -> component edge, -1 elsewhere)
std::vector<std::pair<MoebiusGraph, std::vector<int>>> split_components(const MoebiusGraph& g);

// ---- JSON ------------------------------------------------------------------

std::string graph_to_json(const MoebiusGraph& g);
MoebiusGraph graph_from_json(const std::string& text);

}  // namespace mg

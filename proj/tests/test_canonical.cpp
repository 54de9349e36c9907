#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "moebius/canonical.hpp"
#include "testgraphs.hpp"

using namespace mg;

namespace {

// Brute-force isomorphism oracle for small graphs: try every flip subset of
// the right-hand graph and every seed correspondence, extending rigidly.
bool rigid_iso_from(const MoebiusGraph& a, const MoebiusGraph& b, int da0, int db0) {
    std::vector<int> f(a.num_darts(), -1);
    std::vector<int> stack = {da0};
    f[da0] = db0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int pairs[2][2] = {{a.rot_next[x], b.rot_next[f[x]]}, {a.mate[x], b.mate[f[x]]}};
        for (auto& pr : pairs) {
            int xn = pr[0], yn = pr[1];
            if (f[xn] == -1) {
                f[xn] = yn;
                stack.push_back(xn);
            } else if (f[xn] != yn) {
                return false;
            }
        }
    }
    std::vector<char> hit(a.num_darts(), 0);
    for (int d = 0; d < a.num_darts(); ++d) {
        if (f[d] == -1 || hit[f[d]]) return false;
        hit[f[d]] = 1;
        if (a.edge_sign[a.edge_of[d]] != b.edge_sign[b.edge_of[f[d]]]) return false;
    }
    if (!a.face_labels.empty()) {
        auto fa = trace_faces(a), fb = trace_faces(b);
        // map sides through f and compare labels
        for (int s = 0; s < a.num_darts(); ++s) {
            int e = s / 2, bit = s & 1;
            int d = a.edge_dart[e];
            int fd = f[d];
            int fe = b.edge_of[fd];
            int fbit = fd <= b.mate[fd] ? bit : (bit ^ b.edge_sign[fe] ^ 1);
            int fs = 2 * fe + fbit;
            if (a.face_labels[fa.face_of_side[s]] != b.face_labels[fb.face_of_side[fs]])
                return false;
        }
    }
    return true;
}

int brute_aut_order(const MoebiusGraph& g) {
    int count = 0;
    for (unsigned mask = 0; mask < (1u << g.num_vertices); ++mask) {
        MoebiusGraph h = g;
        for (int v = 0; v < g.num_vertices; ++v)
            if (mask & (1u << v)) h = flip(h, v);
        for (int d = 0; d < g.num_darts(); ++d)
            if (rigid_iso_from(g, h, 0, d)) ++count;
    }
    // every vertex of the flip group acting trivially is counted 2^V times
    // only when some flip fixes the structure, which valency >= 3 excludes
    return count;
}

bool brute_isomorphic(const MoebiusGraph& a, const MoebiusGraph& b) {
    if (a.num_darts() != b.num_darts() || a.num_vertices != b.num_vertices) return false;
    for (unsigned mask = 0; mask < (1u << b.num_vertices); ++mask) {
        MoebiusGraph h = b;
        for (int v = 0; v < b.num_vertices; ++v)
            if (mask & (1u << v)) h = flip(h, v);
        for (int d = 0; d < b.num_darts(); ++d)
            if (rigid_iso_from(a, h, 0, d)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("codes are flip invariant") {
    for (const auto& g : tg::small_zoo()) {
        if (!g.connected()) continue;
        Code c = canonical_code_unlabelled(g);
        for (int v = 0; v < g.num_vertices; ++v)
            CHECK(canonical_code_unlabelled(flip(g, v)) == c);
    }
}

TEST_CASE("codes are dart-relabelling invariant") {
    MoebiusGraph g = tg::theta({1, 0, 1});
    // relabel darts by a permutation: rebuild with shuffled ids
    MoebiusGraph h = MoebiusGraph::build({{4, 2, 0}, {1, 5, 3}}, {{4, 1}, {2, 3}, {0, 5}},
                                         {1, 0, 1});
    CHECK(canonical_code_unlabelled(g) == canonical_code_unlabelled(h));
}

TEST_CASE("codes separate non-isomorphic graphs") {
    CHECK(canonical_code_unlabelled(tg::wedge_two_loops(0, 0)) !=
          canonical_code_unlabelled(tg::interlocked_loops(0, 0)));
    CHECK(canonical_code_unlabelled(tg::interlocked_loops(0, 0)) !=
          canonical_code_unlabelled(tg::interlocked_loops(1, 1)));
    CHECK(canonical_code_unlabelled(tg::loop(0)) != canonical_code_unlabelled(tg::loop(1)));
}

TEST_CASE("code agreement matches brute-force isomorphism") {
    auto zoo = tg::small_zoo_connected();
    for (size_t i = 0; i < zoo.size(); ++i) {
        for (size_t j = i; j < zoo.size(); ++j) {
            bool same_code = canonical_code_unlabelled(zoo[i]) == canonical_code_unlabelled(zoo[j]);
            MoebiusGraph a = zoo[i], b = zoo[j];
            a.face_labels.clear();
            b.face_labels.clear();
            CHECK(same_code == brute_isomorphic(a, b));
        }
    }
}

TEST_CASE("automorphism order matches brute force on valency >= 3 graphs") {
    std::vector<MoebiusGraph> graphs = {
        tg::theta({0, 0, 0}),        tg::theta({1, 0, 1}),
        tg::wedge_two_loops(0, 0),   tg::wedge_two_loops(1, 1),
        tg::interlocked_loops(0, 0), tg::interlocked_loops(1, 1),
        tg::dumbbell(0, 0, 0),       tg::dumbbell(1, 0, 1),
    };
    for (auto g : graphs) {
        auto fs = trace_faces(g);
        g.face_labels.resize(fs.count());
        std::iota(g.face_labels.begin(), g.face_labels.end(), 1);
        CHECK(automorphism_order(g) == brute_aut_order(g));
    }
}

TEST_CASE("orientable graphs have automorphism order at least 2") {
    std::vector<MoebiusGraph> graphs = {tg::theta({0, 0, 0}), tg::interlocked_loops(0, 0),
                                        tg::dumbbell(0, 0, 0), tg::wedge_two_loops(0, 0)};
    for (auto g : graphs) {
        auto fs = trace_faces(g);
        g.face_labels.resize(fs.count());
        std::iota(g.face_labels.begin(), g.face_labels.end(), 1);
        CHECK(automorphism_order(g) >= 2);
        CHECK(automorphism_order(g) % 2 == 0);
    }
}

TEST_CASE("labelled codes distinguish face labellings") {
    MoebiusGraph g = tg::theta({0, 0, 0});
    g.face_labels = {1, 2, 3};
    MoebiusGraph h = tg::theta({0, 0, 0});
    h.face_labels = {2, 1, 3};
    // swapping two labels of the planar theta gives an isomorphic labelled
    // graph only if some automorphism realizes the swap; both cases occur
    // among the permutations, so just check determinism and flip invariance
    CHECK(canonical_code(g) == canonical_code(flip(g, 0)));
    CHECK(canonical_code(h) == canonical_code(flip(h, 1)));
}

TEST_CASE("metric keys identify isomorphic metric graphs") {
    MoebiusGraph g = tg::theta({1, 0, 1});
    MoebiusGraph h = MoebiusGraph::build({{4, 2, 0}, {1, 5, 3}}, {{4, 1}, {2, 3}, {0, 5}},
                                         {1, 0, 1});
    // edges correspond as g:0 -> h:0 (darts 0/3 -> 4/1), g:1 -> h:1, g:2 -> h:2
    Metric mg_{{rat(2), rat(4), rat(6)}};
    Metric mh{{rat(1), rat(2), rat(3)}};  // also scaled by 1/2: homogeneity
    CHECK(canonical_metric_key(g, mg_) == canonical_metric_key(h, mh));
    Metric other{{rat(4), rat(2), rat(6)}};
    CHECK(canonical_metric_key(g, mg_) != canonical_metric_key(g, other));
}

#include <doctest.h>

#include "moebius/graph.hpp"
#include "moebius/parallel.hpp"
#include "testgraphs.hpp"

using namespace mg;

TEST_CASE("untwisted loop: sphere with two faces") {
    MoebiusGraph g = tg::loop(0);
    auto fs = trace_faces(g);
    CHECK(fs.count() == 2);
    auto [twog, n] = graph_type(g);
    CHECK(twog == 0);
    CHECK(n == 2);
    auto a = adjacency_matrix(g);
    CHECK(a[0][0] == 1);
    CHECK(a[1][0] == 1);
    CHECK(is_orientable(g));
}

TEST_CASE("twisted loop: Moebius strip") {
    MoebiusGraph g = tg::loop(1);
    auto fs = trace_faces(g);
    CHECK(fs.count() == 1);
    auto [twog, n] = graph_type(g);
    CHECK(twog == 1);  // g = 1/2
    CHECK(n == 1);
    auto a = adjacency_matrix(g);
    CHECK(a[0][0] == 2);
    CHECK_FALSE(is_orientable(g));
}

TEST_CASE("planar theta has three faces") {
    MoebiusGraph g = tg::theta({0, 0, 0});
    CHECK(trace_faces(g).count() == 3);
    auto [twog, n] = graph_type(g);
    CHECK(twog == 0);
    CHECK(n == 3);
    CHECK(is_orientable(g));
}

TEST_CASE("Klein-bottle theta: one face visiting every edge twice") {
    MoebiusGraph g = tg::theta({1, 0, 1});
    auto fs = trace_faces(g);
    REQUIRE(fs.count() == 1);
    auto a = adjacency_matrix(g);
    CHECK(a[0] == std::vector<int>{2, 2, 2});
    CHECK_FALSE(is_orientable(g));
}

TEST_CASE("flip toggles non-loop signs and preserves faces") {
    MoebiusGraph g = tg::theta({0, 0, 0});
    MoebiusGraph h = flip(g, 0);
    for (int e = 0; e < 3; ++e) CHECK(h.edge_sign[e] == 1);
    CHECK(trace_faces(h).count() == 3);
    CHECK(is_orientable(h));  // flips don't change orientability
    MoebiusGraph hh = flip(h, 0);
    for (int e = 0; e < 3; ++e) CHECK(hh.edge_sign[e] == g.edge_sign[e]);

    MoebiusGraph l = flip(tg::loop(0), 0);  // loop sign toggled twice
    CHECK(l.edge_sign[0] == 0);
    CHECK(trace_faces(l).count() == 2);
}

TEST_CASE("flip is involutive on a two-loop vertex") {
    MoebiusGraph g = tg::wedge_two_loops(1, 0);
    MoebiusGraph h = flip(flip(g, 0), 0);
    CHECK(h.edge_sign == g.edge_sign);
    CHECK(h.rot_next == g.rot_next);
}

TEST_CASE("orientability oracle agreement on small graphs") {
    for (const auto& g : tg::small_zoo()) {
        if (!g.connected()) continue;
        CHECK(is_orientable(g) == is_orientable_double_cover(g));
    }
}

TEST_CASE("adjacency columns sum to 2 and reproduce perimeters") {
    mg::SplitMix rng(7);
    int metrics_checked = 0;
    for (const auto& g : tg::small_zoo()) {
        if (!g.connected()) continue;
        auto a = adjacency_matrix(g);
        for (int e = 0; e < g.num_edges(); ++e) {
            int col = 0;
            for (const auto& row : a) col += row[e];
            CHECK(col == 2);
        }
        for (int trial = 0; trial < 8; ++trial, ++metrics_checked) {
            Metric m;
            for (int e = 0; e < g.num_edges(); ++e)
                m.lengths.push_back(rat(rng.positive(30), rng.positive(9)));
            auto per = face_perimeters(g, m);
            Rat total(0);
            for (const auto& p : per) total += p;
            Rat twice(0);
            for (const auto& l : m.lengths) twice += 2 * l;
            CHECK(total == twice);
            for (size_t i = 0; i < per.size(); ++i) {
                Rat row(0);
                for (int e = 0; e < g.num_edges(); ++e) row += Rat(a[i][e]) * m.lengths[e];
                CHECK(row == per[i]);
            }
        }
    }
    CHECK(metrics_checked >= 100);
}

TEST_CASE("face walk reversal pairs orbits") {
    for (const auto& g : tg::small_zoo()) {
        for (int f = 0; f < 2 * g.num_darts(); ++f) {
            CHECK(flag_reverse(g, flag_reverse(g, f)) == f);
            CHECK(flag_prev(g, flag_next(g, f)) == f);
            // reversal conjugates the walk to its inverse
            CHECK(flag_reverse(g, flag_next(g, flag_reverse(g, f))) == flag_prev(g, f));
        }
    }
}

TEST_CASE("edge removal keeps structure consistent") {
    MoebiusGraph g = tg::theta({1, 0, 1});
    auto rem = remove_edges(g, {1});
    rem.graph.check_well_formed();
    CHECK(rem.graph.num_edges() == 2);
    CHECK(rem.graph.num_vertices == 2);
    CHECK(rem.edge_map[0] == 0);
    CHECK(rem.edge_map[1] == -1);
    CHECK(rem.edge_map[2] == 1);
}

TEST_CASE("component splitting") {
    // two disjoint loops via a disconnected build
    MoebiusGraph g = MoebiusGraph::build({{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}, {0, 1});
    CHECK_FALSE(g.connected());
    CHECK(component_count(g) == 2);
    auto comps = split_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first.num_edges() == 1);
    CHECK(comps[1].first.edge_sign[0] == 1);
}

TEST_CASE("json round trip is exact") {
    for (const auto& g0 : tg::small_zoo()) {
        MoebiusGraph g = g0;
        if (g.connected()) {
            auto fs = trace_faces(g);
            g.face_labels.resize(fs.count());
            for (int i = 0; i < fs.count(); ++i) g.face_labels[i] = i + 1;
        }
        std::string s = graph_to_json(g);
        MoebiusGraph h = graph_from_json(s);
        CHECK(graph_to_json(h) == s);
    }
}

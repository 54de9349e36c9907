#include "moebius/mon.hpp"

#include <stdexcept>

#include "moebius/canonical.hpp"
#include "moebius/errors.hpp"

namespace mg {

std::vector<int> roots(const MoebiusGraph& g) {
    if (g.num_edges() == 0) throw PreconditionError("roots: edgeless graph");
    std::vector<int> out(2 * g.num_darts());
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
}

FaceOrientation face_orientation_order(const MoebiusGraph& g, int root_flag) {
    if (!g.connected()) throw PreconditionError("face_orientation_order: disconnected graph");
    int nsides = g.num_darts();
    FaceOrientation fo;
    fo.flag_of_side.assign(nsides, -1);
    fo.order.reserve(nsides);
    auto walk_face = [&](int start) {
        int f = start;
        do {
            int s = side_of_flag(g, f);
            if (fo.flag_of_side[s] != -1) throw std::logic_error("side ordered twice");
            fo.flag_of_side[s] = f;
            fo.order.push_back(f);
            f = flag_next(g, f);
        } while (f != start);
    };
    walk_face(root_flag);
    for (size_t i = 0; i < fo.order.size(); ++i) {
        int f = fo.order[i];
        int opp = side_of_flag(g, f) ^ 1;
        if (fo.flag_of_side[opp] == -1) walk_face(flag_jump(g, f));
    }
    if (static_cast<int>(fo.order.size()) != nsides)
        throw std::logic_error("face orientation did not cover all sides");
    return fo;
}

std::pair<WeightCase, BPoly> classify_root_removal(const MoebiusGraph& g, int root_flag) {
    int er = g.edge_of[flag_dart(root_flag)];
    EdgeRemoval rem = remove_edges(g, {er});
    if (component_count(rem.graph) > 1) return {WeightCase::Disconnecting, BPoly(1)};
    int before = trace_faces(g).count();
    int after = rem.graph.num_edges() == 0 ? 1 : trace_faces(rem.graph).count();
    int delta = after - before;
    if (delta == -1) return {WeightCase::FaceMerge, BPoly(1)};
    if (delta == 0) return {WeightCase::FaceKeep, BPoly::b()};
    if (delta != 1) throw std::logic_error("edge removal changed face count by more than one");
    // face split: compare the orientation the old root walk gave to the side
    // preceding the root against the orientation induced on G - e_r by
    // re-rooting at the successor side
    int succ = flag_next(g, root_flag);
    int pred = flag_prev(g, root_flag);
    if (g.edge_of[flag_dart(succ)] == er || g.edge_of[flag_dart(pred)] == er)
        throw std::logic_error("split removal with degenerate root neighbourhood");
    int succ_h = rem.map_flag(succ);
    int pred_h = rem.map_flag(pred);
    FaceOrientation fo = face_orientation_order(rem.graph, succ_h);
    int assigned = fo.flag_of_side[side_of_flag(rem.graph, pred_h)];
    if (assigned == pred_h) return {WeightCase::FaceSplitAligned, BPoly(1)};
    if (assigned == flag_reverse(rem.graph, pred_h))
        return {WeightCase::FaceSplitReversed, BPoly::b()};
    throw std::logic_error("side flag not on its own side");
}

namespace {

BPoly mon_connected(const MoebiusGraph& g, const Metric& m, MonCache* cache);

BPoly mon_any(const MoebiusGraph& g, const Metric& m, MonCache* cache) {
    if (g.num_edges() == 0) return BPoly(1);
    if (g.connected()) return mon_connected(g, m, cache);
    BPoly prod(1);
    for (auto& [comp, emap] : split_components(g)) {
        Metric sub;
        sub.lengths.resize(comp.num_edges());
        for (int e = 0; e < g.num_edges(); ++e)
            if (emap[e] >= 0) sub.lengths[emap[e]] = m.lengths[e];
        prod *= mon_any(comp, sub, cache);
    }
    return prod;
}

BPoly mon_connected(const MoebiusGraph& g, const Metric& m, MonCache* cache) {
    std::string key;
    if (cache) {
        key = canonical_metric_key(g, m);
        auto it = cache->values.find(key);
        if (it != cache->values.end()) return it->second;
    }
    int faces_before = trace_faces(g).count();
    BPoly num;
    Rat den(0);
    for (int e = 0; e < g.num_edges(); ++e) {
        EdgeRemoval rem = remove_edges(g, {e});
        Metric sub;
        sub.lengths.resize(rem.graph.num_edges());
        for (int e2 = 0; e2 < g.num_edges(); ++e2)
            if (rem.edge_map[e2] >= 0) sub.lengths[rem.edge_map[e2]] = m.lengths[e2];
        BPoly sub_mon = mon_any(rem.graph, sub, cache);
        bool disconnected = component_count(rem.graph) > 1;
        int faces_after = rem.graph.num_edges() == 0 ? 1 : trace_faces(rem.graph).count();
        int delta = faces_after - faces_before;
        int d0 = g.edge_dart[e];
        for (int dart : {d0, g.mate[d0]}) {
            for (int eps = 0; eps < 2; ++eps) {
                BPoly w;
                if (disconnected || delta == -1)
                    w = BPoly(1);
                else if (delta == 0)
                    w = BPoly::b();
                else
                    w = classify_root_removal(g, flag_of(dart, eps)).second;
                num += m.lengths[e] * w * sub_mon;
                den += m.lengths[e];
            }
        }
    }
    BPoly result = num / den;
    if (cache) cache->values.emplace(std::move(key), result);
    return result;
}

}  // namespace

BPoly mon(const MoebiusGraph& g, const Metric& m, MonCache* cache) {
    if (static_cast<int>(m.lengths.size()) != g.num_edges())
        throw PreconditionError("mon: metric size mismatch");
    for (const auto& l : m.lengths)
        if (l <= 0) throw PreconditionError("mon: non-positive edge length");
    MonCache local;
    return mon_any(g, m, cache ? cache : &local);
}

BPoly average_mon(const MoebiusGraph& g, MonCache* cache) {
    if (!g.connected()) throw PreconditionError("average_mon: disconnected graph");
    Metric unit;
    unit.lengths.assign(g.num_edges(), Rat(1));
    return mon(g, unit, cache);
}

}  // namespace mg

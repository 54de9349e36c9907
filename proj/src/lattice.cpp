#include "moebius/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace mg {

std::vector<std::vector<long>> integral_metrics(const MoebiusGraph& g, const LVec& L) {
    auto a = adjacency_matrix(g);
    int nf = static_cast<int>(a.size()), ne = g.num_edges();
    if (nf != static_cast<int>(L.size()))
        throw PreconditionError("integral_metrics: boundary count mismatch");
    // visit edges with a doubled face incidence first: their budgets are tight
    std::vector<int> order(ne);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        int mx = 0, my = 0;
        for (int i = 0; i < nf; ++i) {
            mx = std::max(mx, a[i][x]);
            my = std::max(my, a[i][y]);
        }
        return mx > my;
    });
    // minimal remaining demand per face from position k on
    std::vector<std::vector<long>> min_rest(ne + 1, std::vector<long>(nf, 0));
    for (int k = ne - 1; k >= 0; --k)
        for (int i = 0; i < nf; ++i) min_rest[k][i] = min_rest[k + 1][i] + a[i][order[k]];

    std::vector<std::vector<long>> out;
    std::vector<long> rem(L.begin(), L.end());
    std::vector<long> lengths(ne, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == ne) {
            for (int i = 0; i < nf; ++i)
                if (rem[i] != 0) return;
            out.push_back(lengths);
            return;
        }
        int e = order[k];
        long hi = -1;
        for (int i = 0; i < nf; ++i) {
            if (a[i][e] == 0) continue;
            long room = (rem[i] - min_rest[k + 1][i]) / a[i][e];
            hi = hi < 0 ? room : std::min(hi, room);
        }
        for (long v = 1; v <= hi; ++v) {
            lengths[e] = v;
            for (int i = 0; i < nf; ++i) rem[i] -= a[i][e] * v;
            bool ok = true;
            for (int i = 0; i < nf && ok; ++i) ok = rem[i] >= min_rest[k + 1][i];
            if (ok) rec(k + 1);
            for (int i = 0; i < nf; ++i) rem[i] += a[i][e] * v;
        }
        lengths[e] = 0;
    };
    rec(0);
    return out;
}

namespace {

// L is indexed by boundary label; the adjacency system wants it by face index
LVec permute_by_labels(const MoebiusGraph& g, const LVec& L) {
    LVec by_face(L.size());
    for (size_t f = 0; f < L.size(); ++f) by_face[f] = L.at(g.face_labels.at(f) - 1);
    return by_face;
}

}  // namespace

BPoly count_direct(int two_g, int n, const LVec& L, MonCache* cache, const EnumerateOptions& opts) {
    if (two_g - 2 + n < 1) throw PreconditionError("count_direct: unstable type");
    for (long x : L)
        if (x < 1) throw PreconditionError("count_direct: boundary lengths must be positive");
    if (lsum(L) % 2 != 0) return BPoly();
    GraphInventory inv = enumerate_graphs(two_g, n, opts);
    MonCache local;
    MonCache* mc = cache ? cache : &local;
    BPoly total;
    long budget = lsum(L) / 2;
    for (const auto& ent : inv.entries) {
        if (ent.num_edges > budget) continue;  // every edge needs length >= 1
        BPoly graph_sum;
        LVec by_face = permute_by_labels(ent.graph, L);
        for (const auto& sol : integral_metrics(ent.graph, by_face)) {
            Metric m;
            m.lengths.assign(sol.begin(), sol.end());
            graph_sum += mon(ent.graph, m, mc);
        }
        total += graph_sum / Rat(ent.aut_order);
    }
    return total;
}

namespace {

// smooth one two-valent vertex carrying two distinct edges; returns false if
// none exists
bool smooth_once(MoebiusGraph& g, Metric& m, std::vector<int>& flag_map) {
    int target = -1;
    for (int v = 0; v < g.num_vertices && target < 0; ++v)
        if (g.degree(v) == 2) {
            auto ds = g.darts_of_vertex(v);
            if (g.edge_of[ds[0]] != g.edge_of[ds[1]]) target = v;
        }
    if (target < 0) return false;
    auto ds = g.darts_of_vertex(target);
    int x1 = ds[0], x2 = g.rot_next[ds[0]];
    int e1 = g.edge_of[x1], e2 = g.edge_of[x2];
    int a1 = g.mate[x1], a2 = g.mate[x2];
    int l1 = g.edge_sign[e1], l2 = g.edge_sign[e2];

    // merged edge reuses the dart slots a1, a2; x1, x2 and the vertex vanish
    MoebiusGraph h;
    std::vector<int> dart_map(g.num_darts(), -1), vmap(g.num_vertices, -1);
    int nd = 0;
    for (int d = 0; d < g.num_darts(); ++d)
        if (d != x1 && d != x2) dart_map[d] = nd++;
    int nv = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (v != target) vmap[v] = nv++;
    h.num_vertices = nv;
    h.vertex_of.assign(nd, -1);
    h.rot_next.assign(nd, -1);
    h.rot_prev.assign(nd, -1);
    h.mate.assign(nd, -1);
    h.edge_of.assign(nd, -1);
    std::vector<int> emap(g.num_edges(), -1);
    int ne = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        if (e != e2) emap[e] = ne++;  // the merged edge keeps e1's slot
    h.edge_dart.assign(ne, 1 << 30);
    h.edge_sign.assign(ne, 0);
    for (int d = 0; d < g.num_darts(); ++d) {
        if (dart_map[d] < 0) continue;
        int id = dart_map[d];
        h.vertex_of[id] = vmap[g.vertex_of[d]];
        h.rot_next[id] = dart_map[g.rot_next[d]];
        h.rot_prev[id] = dart_map[g.rot_prev[d]];
        int e = g.edge_of[d];
        if (d == a1 || d == a2) {
            h.mate[id] = dart_map[d == a1 ? a2 : a1];
            h.edge_of[id] = emap[e1];
        } else {
            h.mate[id] = dart_map[g.mate[d]];
            h.edge_of[id] = emap[e];
        }
        h.edge_sign[h.edge_of[id]] = g.edge_sign[e];
        h.edge_dart[h.edge_of[id]] = std::min(h.edge_dart[h.edge_of[id]], id);
    }
    h.edge_sign[emap[e1]] = static_cast<uint8_t>(l1 ^ l2);

    Metric hm;
    hm.lengths.assign(ne, Rat(0));
    for (int e = 0; e < g.num_edges(); ++e)
        if (emap[e] >= 0) hm.lengths[emap[e]] = m.lengths[e];
    hm.lengths[emap[e1]] = m.lengths[e1] + m.lengths[e2];

    // sides of e1/e2 become sides of the merged edge; the passage through the
    // smoothed vertex carries the other edge's twist
    auto map_one = [&](int f) -> int {
        if (f < 0) return -1;
        int d = flag_dart(f), eps = flag_orient(f);
        if (d == x1) return flag_of(dart_map[a2], eps ^ l2);
        if (d == x2) return flag_of(dart_map[a1], eps ^ l1);
        return flag_of(dart_map[d], eps);
    };
    for (auto& f : flag_map) f = map_one(f);
    g = std::move(h);
    m = std::move(hm);
    return true;
}

void drop_isolated_vertices(MoebiusGraph& g) {
    std::vector<int> deg(g.num_vertices, 0);
    for (int d = 0; d < g.num_darts(); ++d) ++deg[g.vertex_of[d]];
    std::vector<int> vmap(g.num_vertices, -1);
    int nv = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (deg[v] > 0) vmap[v] = nv++;
    for (auto& v : g.vertex_of) v = vmap[v];
    g.num_vertices = nv;
}

}  // namespace

TrimResult trim(const MoebiusGraph& g, int e, const Metric& m) {
    for (int v = 0; v < g.num_vertices; ++v)
        if (g.degree(v) < 3) throw PreconditionError("trim: valency below three");
    std::vector<int> removed = {e};
    int d = g.edge_dart[e];
    bool lollipop = false;
    if (g.is_loop(e)) {
        int v = g.vertex_of[d];
        if (g.degree(v) == 3) {
            // e is a candy; the third dart at v carries the stick
            for (int x : g.darts_of_vertex(v))
                if (g.edge_of[x] != e) {
                    removed.push_back(g.edge_of[x]);
                    lollipop = true;
                    break;
                }
        }
    } else {
        // a stick: an endpoint of degree three whose other darts form a loop
        for (int end : {d, g.mate[d]}) {
            int v = g.vertex_of[end];
            if (g.degree(v) != 3) continue;
            std::vector<int> others;
            for (int x : g.darts_of_vertex(v))
                if (x != end) others.push_back(x);
            if (others.size() == 2 && g.edge_of[others[0]] == g.edge_of[others[1]]) {
                removed.push_back(g.edge_of[others[0]]);
                lollipop = true;
                break;  // a doubly lollipopped stick sheds one candy only
            }
        }
    }
    EdgeRemoval rem = remove_edges(g, removed);
    TrimResult tr;
    tr.removed_lollipop = lollipop;
    tr.graph = rem.graph;
    tr.metric.lengths.assign(tr.graph.num_edges(), Rat(0));
    for (int e2 = 0; e2 < g.num_edges(); ++e2)
        if (rem.edge_map[e2] >= 0) tr.metric.lengths[rem.edge_map[e2]] = m.lengths[e2];
    tr.flag_map.resize(2 * g.num_darts());
    for (int f = 0; f < 2 * g.num_darts(); ++f) tr.flag_map[f] = rem.map_flag(f);
    while (smooth_once(tr.graph, tr.metric, tr.flag_map)) {
    }
    drop_isolated_vertices(tr.graph);
    return tr;
}

std::pair<CiliatedCase, BPoly> classify_ciliated_root(const MoebiusGraph& g, int root_flag) {
    int er = g.edge_of[flag_dart(root_flag)];
    Metric dummy;
    dummy.lengths.assign(g.num_edges(), Rat(1));
    TrimResult tr = trim(g, er, dummy);
    if (component_count(tr.graph) > 1) return {CiliatedCase::Dd, BPoly(1)};
    int before = trace_faces(g).count();
    int after = tr.graph.num_edges() == 0 ? 0 : trace_faces(tr.graph).count();
    int delta = after - before;
    if (delta == -1) return {CiliatedCase::R, BPoly(1)};
    if (delta == 0) return {CiliatedCase::E, BPoly::b()};
    if (delta != 1) throw std::logic_error("trimmed removal changed face count oddly");
    int succ = tr.flag_map[flag_next(g, root_flag)];
    int pred = tr.flag_map[flag_prev(g, root_flag)];
    if (succ < 0 || pred < 0) throw std::logic_error("split root neighbourhood was trimmed away");
    FaceOrientation fo = face_orientation_order(tr.graph, succ);
    int assigned = fo.flag_of_side[side_of_flag(tr.graph, pred)];
    if (assigned == pred) return {CiliatedCase::Dc, BPoly(1)};
    if (assigned == flag_reverse(tr.graph, pred)) return {CiliatedCase::Dc, BPoly::b()};
    throw std::logic_error("side flag not on its own side");
}

BPoly ciliated_count(int two_g, int n, const LVec& L, MonCache* cache,
                     const EnumerateOptions& opts) {
    if (two_g - 2 + n < 1) throw PreconditionError("ciliated_count: unstable type");
    if (lsum(L) % 2 != 0) return BPoly();
    GraphInventory inv = enumerate_graphs(two_g, n, opts);
    MonCache local;
    MonCache* mc = cache ? cache : &local;
    BPoly total;
    long budget = lsum(L) / 2;
    for (const auto& ent : inv.entries) {
        if (ent.num_edges > budget) continue;
        const MoebiusGraph& g = ent.graph;
        // the weight depends only on the root, not the metric or the cilium
        std::vector<BPoly> weight(2 * g.num_darts());
        for (int r = 0; r < 2 * g.num_darts(); ++r)
            weight[r] = classify_ciliated_root(g, r).second;
        BPoly graph_sum;
        LVec by_face = permute_by_labels(g, L);
        for (const auto& sol : integral_metrics(g, by_face)) {
            Metric m;
            m.lengths.assign(sol.begin(), sol.end());
            for (int r = 0; r < 2 * g.num_darts(); ++r) {
                int er = g.edge_of[flag_dart(r)];
                TrimResult tr = trim(g, er, m);
                // l_{e_r} cilium positions per root
                graph_sum += m.lengths[er] * weight[r] * mon(tr.graph, tr.metric, mc);
            }
        }
        total += graph_sum / Rat(ent.aut_order);
    }
    return total;
}

}  // namespace mg

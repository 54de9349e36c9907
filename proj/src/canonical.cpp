#include "moebius/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace mg {

namespace {
constexpr int32_t kNew = -1;
constexpr int32_t kFaceSep = -2;
}  // namespace

Code encode_seed(const MoebiusGraph& g, int start_dart, int reflect, bool with_face_labels,
                 EncodeScratch& sc, std::vector<int>* edge_label_out) {
    int nd = g.num_darts(), ne = g.num_edges(), nv = g.num_vertices;
    sc.dart_label.assign(nd, -1);
    sc.edge_label.assign(ne, -1);
    sc.phi.assign(nv, -1);
    sc.vertex_order.clear();
    sc.entry_dart.clear();

    Code words;
    words.reserve(nv + 2 * nd);

    int v0 = g.vertex_of[start_dart];
    sc.phi[v0] = static_cast<int8_t>(reflect);
    sc.vertex_order.push_back(v0);
    sc.entry_dart.push_back(start_dart);
    int next_dart = 0, next_edge = 0;

    for (size_t idx = 0; idx < sc.vertex_order.size(); ++idx) {
        int v = sc.vertex_order[idx];
        int d_in = sc.entry_dart[idx];
        int ph = sc.phi[v];
        int x = d_in;
        int deg = 0;
        do {
            ++deg;
            x = ph == 0 ? g.rot_next[x] : g.rot_prev[x];
        } while (x != d_in);
        words.push_back(deg);
        x = d_in;
        for (int t = 0; t < deg; ++t) {
            sc.dart_label[x] = next_dart++;
            int e = g.edge_of[x];
            int y = g.mate[x];
            if (sc.edge_label[e] == -1) {
                sc.edge_label[e] = next_edge++;
                words.push_back(kNew);
                int w = g.vertex_of[y];
                if (sc.phi[w] == -1) {
                    // tree edge: pick the flip state of w that clears its sign
                    sc.phi[w] = static_cast<int8_t>(g.edge_sign[e] ^ ph);
                    sc.vertex_order.push_back(w);
                    sc.entry_dart.push_back(y);
                }
            } else {
                int eff = g.edge_sign[e] ^ sc.phi[g.vertex_of[x]] ^ sc.phi[g.vertex_of[y]];
                words.push_back(2 * sc.edge_label[e] + eff);
            }
            x = ph == 0 ? g.rot_next[x] : g.rot_prev[x];
        }
    }
    if (static_cast<int>(sc.vertex_order.size()) != nv)
        throw std::invalid_argument("encode: disconnected graph");

    if (with_face_labels && !g.face_labels.empty()) {
        FaceSystem fs = trace_faces(g);
        int n = fs.count();
        // block for each label value in increasing order: sorted canonical sides
        std::vector<int> face_by_label(n, -1);
        for (int i = 0; i < n; ++i) {
            int lbl = g.face_labels[i];
            if (lbl < 1 || lbl > n || face_by_label[lbl - 1] != -1)
                throw std::invalid_argument("bad face labels");
            face_by_label[lbl - 1] = i;
        }
        std::vector<int> canon_sides;
        for (int lbl = 0; lbl < n; ++lbl) {
            canon_sides.clear();
            for (int s : fs.faces[face_by_label[lbl]]) {
                int e = s / 2, bit = s & 1;
                // side bit as read at the canonically smaller dart, flip-adjusted
                int dlow = g.edge_dart[e], dhigh = g.mate[dlow];
                int bit_low = bit;  // side ids are defined at the smaller dart
                int bit_high = bit ^ g.edge_sign[e] ^ 1;
                int cd, cbit;
                if (sc.dart_label[dlow] <= sc.dart_label[dhigh]) {
                    cd = dlow;
                    cbit = bit_low;
                } else {
                    cd = dhigh;
                    cbit = bit_high;
                }
                cbit ^= sc.phi[g.vertex_of[cd]];
                canon_sides.push_back(2 * sc.edge_label[e] + cbit);
            }
            std::sort(canon_sides.begin(), canon_sides.end());
            words.push_back(kFaceSep);
            for (int cs : canon_sides) words.push_back(cs);
        }
    }
    if (edge_label_out) *edge_label_out = sc.edge_label;
    return words;
}

namespace {

Code min_code(const MoebiusGraph& g, bool with_labels, int* aut_out) {
    EncodeScratch sc;
    Code best;
    int count = 0;
    for (int d = 0; d < g.num_darts(); ++d) {
        for (int r = 0; r < 2; ++r) {
            Code c = encode_seed(g, d, r, with_labels, sc);
            if (best.empty() || c < best) {
                best = std::move(c);
                count = 1;
            } else if (c == best) {
                ++count;
            }
        }
    }
    if (aut_out) *aut_out = count;
    return best;
}

}  // namespace

Code canonical_code(const MoebiusGraph& g) { return min_code(g, true, nullptr); }

Code canonical_code_unlabelled(const MoebiusGraph& g) {
    MoebiusGraph h = g;
    h.face_labels.clear();
    return min_code(h, false, nullptr);
}

int automorphism_order(const MoebiusGraph& g) {
    int aut = 0;
    min_code(g, true, &aut);
    return aut;
}

std::string canonical_metric_key(const MoebiusGraph& g, const Metric& m) {
    EncodeScratch sc;
    Code best;
    std::vector<int> elab;
    std::vector<Rat> best_lengths;
    Rat lmin = m.lengths[0];
    for (const auto& l : m.lengths) lmin = std::min(lmin, l);
    for (int d = 0; d < g.num_darts(); ++d) {
        for (int r = 0; r < 2; ++r) {
            Code c = encode_seed(g, d, r, false, sc, &elab);
            int cmp = best.empty() ? -1 : (c < best ? -1 : (c == best ? 0 : 1));
            if (cmp > 0) continue;
            std::vector<Rat> lengths(g.num_edges());
            for (int e = 0; e < g.num_edges(); ++e) lengths[elab[e]] = m.lengths[e] / lmin;
            if (cmp < 0 || lengths < best_lengths) {
                best = std::move(c);
                best_lengths = std::move(lengths);
            }
        }
    }
    std::string key = code_bytes(best);
    key += '|';
    for (const auto& l : best_lengths) {
        key += rat_str(l);
        key += ',';
    }
    return key;
}

std::string code_bytes(const Code& c) {
    return std::string(reinterpret_cast<const char*>(c.data()), c.size() * sizeof(int32_t));
}

bool bfs_identity_canonical(const MoebiusGraph& g) {
    // plain BFS walk from dart 0 with no reflections; dart discovery order
    // must coincide with the dart numbering itself
    int nd = g.num_darts();
    std::vector<int> entry;
    std::vector<char> vseen(g.num_vertices, 0);
    entry.push_back(0);
    vseen[g.vertex_of[0]] = 1;
    int next_label = 0;
    for (size_t idx = 0; idx < entry.size(); ++idx) {
        int d_in = entry[idx];
        int x = d_in;
        do {
            if (x != next_label++) return false;
            int y = g.mate[x];
            int w = g.vertex_of[y];
            if (!vseen[w]) {
                vseen[w] = 1;
                entry.push_back(y);
            }
            x = g.rot_next[x];
        } while (x != d_in);
    }
    return next_label == nd;
}

}  // namespace mg

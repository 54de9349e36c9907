#include "moebius/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mg {

int MoebiusGraph::degree(int v) const {
    int d = 0;
    for (int x = 0; x < num_darts(); ++x)
        if (vertex_of[x] == v) ++d;
    return d;
}

std::vector<int> MoebiusGraph::darts_of_vertex(int v) const {
    std::vector<int> out;
    for (int x = 0; x < num_darts(); ++x)
        if (vertex_of[x] == v) out.push_back(x);
    return out;
}

MoebiusGraph MoebiusGraph::build(const std::vector<std::vector<int>>& vertices,
                                 const std::vector<std::pair<int, int>>& pairing,
                                 const std::vector<uint8_t>& signs,
                                 std::vector<int> face_labels) {
    MoebiusGraph g;
    g.num_vertices = static_cast<int>(vertices.size());
    int nd = 0;
    for (const auto& rot : vertices) nd += static_cast<int>(rot.size());
    g.vertex_of.assign(nd, -1);
    g.rot_next.assign(nd, -1);
    g.rot_prev.assign(nd, -1);
    g.mate.assign(nd, -1);
    g.edge_of.assign(nd, -1);
    for (int v = 0; v < g.num_vertices; ++v) {
        const auto& rot = vertices[v];
        for (size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || d >= nd || g.vertex_of[d] != -1)
                throw std::invalid_argument("bad rotation system");
            g.vertex_of[d] = v;
            g.rot_next[d] = rot[(i + 1) % rot.size()];
            g.rot_prev[d] = rot[(i + rot.size() - 1) % rot.size()];
        }
    }
    if (signs.size() != pairing.size()) throw std::invalid_argument("signs/pairing mismatch");
    g.edge_sign = signs;
    g.edge_dart.resize(pairing.size());
    for (size_t e = 0; e < pairing.size(); ++e) {
        auto [a, b] = pairing[e];
        if (a == b || g.mate[a] != -1 || g.mate[b] != -1)
            throw std::invalid_argument("bad pairing");
        g.mate[a] = b;
        g.mate[b] = a;
        g.edge_of[a] = g.edge_of[b] = static_cast<int>(e);
        g.edge_dart[e] = std::min(a, b);
    }
    for (int d = 0; d < nd; ++d)
        if (g.mate[d] == -1) throw std::invalid_argument("unpaired dart");
    g.face_labels = std::move(face_labels);
    return g;
}

bool MoebiusGraph::connected() const {
    if (num_vertices == 0) return true;
    std::vector<char> seen(num_vertices, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d = 0; d < num_darts(); ++d) {
            if (vertex_of[d] != v) continue;
            int w = vertex_of[mate[d]];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == num_vertices;
}

void MoebiusGraph::check_well_formed() const {
    int nd = num_darts();
    for (int d = 0; d < nd; ++d) {
        if (mate[d] == d || mate[mate[d]] != d) throw std::invalid_argument("bad mate");
        if (rot_next[rot_prev[d]] != d || rot_prev[rot_next[d]] != d)
            throw std::invalid_argument("bad rotation");
        if (vertex_of[rot_next[d]] != vertex_of[d]) throw std::invalid_argument("rotation crosses vertices");
    }
    if (!face_labels.empty()) {
        int n = trace_faces(*this).count();
        if (static_cast<int>(face_labels.size()) != n)
            throw std::invalid_argument("face label count mismatch");
    }
}

FaceSystem trace_faces(const MoebiusGraph& g) {
    int nf = 2 * g.num_darts();  // flags
    FaceSystem fs;
    fs.face_of_side.assign(g.num_darts(), -1);  // 2E sides
    std::vector<char> flag_seen(nf, 0);
    for (int f0 = 0; f0 < nf; ++f0) {
        if (flag_seen[f0]) continue;
        // walk the orbit of f0 and mark the reversed orbit as seen too,
        // so each face is emitted once (orbits come in direction pairs)
        std::vector<int> sides;
        int f = f0;
        do {
            flag_seen[f] = 1;
            flag_seen[flag_reverse(g, f)] = 1;
            int s = side_of_flag(g, f);
            if (fs.face_of_side[s] != -1) throw std::logic_error("side visited twice");
            fs.face_of_side[s] = static_cast<int>(fs.faces.size());
            sides.push_back(s);
            f = flag_next(g, f);
        } while (f != f0);
        fs.faces.push_back(std::move(sides));
    }
    return fs;
}

std::pair<int, int> graph_type(const MoebiusGraph& g) {
    if (!g.connected()) throw std::invalid_argument("graph_type: disconnected graph");
    int n = trace_faces(g).count();
    int euler = g.num_edges() - g.num_vertices;  // 2g - 2 + n
    int twog = euler + 2 - n;
    if (twog < 0) throw std::logic_error("negative genus");
    return {twog, n};
}

MoebiusGraph flip(const MoebiusGraph& g, int v) {
    if (v < 0 || v >= g.num_vertices) throw std::invalid_argument("flip: unknown vertex");
    MoebiusGraph h = g;
    for (int d = 0; d < g.num_darts(); ++d) {
        if (g.vertex_of[d] != v) continue;
        std::swap(h.rot_next[d], h.rot_prev[d]);
        h.edge_sign[g.edge_of[d]] ^= 1;  // loops get toggled twice
    }
    if (!g.face_labels.empty()) {
        // labels follow the geometric faces; flipping v sends the walk state
        // (d, e) to (d, e ^ [d at v]), which can permute face indices
        FaceSystem old_fs = trace_faces(g);
        FaceSystem new_fs = trace_faces(h);
        h.face_labels.assign(new_fs.count(), 0);
        std::vector<char> seen(2 * g.num_darts(), 0);
        for (int f0 = 0; f0 < 2 * g.num_darts(); ++f0) {
            if (seen[f0]) continue;
            int f = f0;
            do {
                seen[f] = 1;
                seen[flag_reverse(g, f)] = 1;
                f = flag_next(g, f);
            } while (f != f0);
            int old_face = old_fs.face_of_side[side_of_flag(g, f0)];
            int d = flag_dart(f0);
            int mapped = flag_of(d, flag_orient(f0) ^ (g.vertex_of[d] == v ? 1 : 0));
            int new_face = new_fs.face_of_side[side_of_flag(h, mapped)];
            h.face_labels[new_face] = g.face_labels[old_face];
        }
    }
    return h;
}

bool is_orientable(const MoebiusGraph& g) {
    if (!g.connected()) throw std::invalid_argument("is_orientable: disconnected graph");
    // Flips form a vertex-indexed Z2 action; orientable iff some flip vector x
    // clears every sign: sign(e) = x(u) + x(w) for non-loops, 0 for loops.
    std::vector<int> x(g.num_vertices, -1);
    x[0] = 0;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d = 0; d < g.num_darts(); ++d) {
            if (g.vertex_of[d] != v) continue;
            int e = g.edge_of[d];
            int w = g.vertex_of[g.mate[d]];
            if (w == v) {
                if (g.edge_sign[e]) return false;  // loop signs are flip-invariant
                continue;
            }
            int want = x[v] ^ g.edge_sign[e];
            if (x[w] == -1) {
                x[w] = want;
                stack.push_back(w);
            } else if (x[w] != want) {
                return false;
            }
        }
    }
    return true;
}

bool is_orientable_double_cover(const MoebiusGraph& g) {
    // Orientation double cover: two copies v+ / v- of each vertex, the minus
    // copy with reversed rotation; an end of a sign-s edge at v in copy c
    // connects to the far end in copy c^s. G is orientable iff the cover
    // is disconnected (two components), and then it has 2n faces.
    int nd = g.num_darts();
    std::vector<std::vector<int>> rots(2 * g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) {
        std::vector<int> rot;
        int start = -1;
        for (int d = 0; d < nd && start == -1; ++d)
            if (g.vertex_of[d] == v) start = d;
        int d = start;
        do {
            rot.push_back(d);
            d = g.rot_next[d];
        } while (d != start);
        for (int c = 0; c < 2; ++c) {
            std::vector<int> lifted;
            for (int x : rot) lifted.push_back(2 * x + c);
            if (c == 1) std::reverse(lifted.begin(), lifted.end());
            rots[2 * v + c] = lifted;
        }
    }
    std::vector<std::pair<int, int>> pairing;
    std::vector<uint8_t> signs;
    for (int e = 0; e < g.num_edges(); ++e) {
        int a = g.edge_dart[e], b = g.mate[a];
        int s = g.edge_sign[e];
        pairing.push_back({2 * a + 0, 2 * b + (0 ^ s)});
        pairing.push_back({2 * a + 1, 2 * b + (1 ^ s)});
        signs.push_back(0);
        signs.push_back(0);
    }
    // re-index darts to 0..4E-1 and vertices accordingly
    std::vector<std::vector<int>> vertices;
    for (auto& r : rots) vertices.push_back(r);
    MoebiusGraph cover = MoebiusGraph::build(vertices, pairing, signs);
    return component_count(cover) == 2;
}

std::vector<std::vector<int>> adjacency_matrix(const MoebiusGraph& g) {
    FaceSystem fs = trace_faces(g);
    std::vector<std::vector<int>> a(fs.count(), std::vector<int>(g.num_edges(), 0));
    for (int i = 0; i < fs.count(); ++i)
        for (int s : fs.faces[i]) a[i][s / 2] += 1;
    return a;
}

std::vector<Rat> face_perimeters(const MoebiusGraph& g, const Metric& m) {
    FaceSystem fs = trace_faces(g);
    std::vector<Rat> p(fs.count(), Rat(0));
    for (int i = 0; i < fs.count(); ++i)
        for (int s : fs.faces[i]) p[i] += m.lengths[s / 2];
    return p;
}

EdgeRemoval remove_edges(const MoebiusGraph& g, const std::vector<int>& edges) {
    std::vector<char> drop(g.num_edges(), 0);
    for (int e : edges) drop[e] = 1;
    EdgeRemoval out;
    out.dart_map.assign(g.num_darts(), -1);
    out.edge_map.assign(g.num_edges(), -1);
    int nd = 0;
    for (int d = 0; d < g.num_darts(); ++d)
        if (!drop[g.edge_of[d]]) out.dart_map[d] = nd++;
    MoebiusGraph& h = out.graph;
    h.num_vertices = g.num_vertices;
    h.vertex_of.assign(nd, -1);
    h.rot_next.assign(nd, -1);
    h.rot_prev.assign(nd, -1);
    h.mate.assign(nd, -1);
    h.edge_of.assign(nd, -1);
    int ne = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        if (!drop[e]) out.edge_map[e] = ne++;
    h.edge_dart.assign(ne, -1);
    h.edge_sign.assign(ne, 0);
    for (int d = 0; d < g.num_darts(); ++d) {
        if (out.dart_map[d] < 0) continue;
        int nd_id = out.dart_map[d];
        h.vertex_of[nd_id] = g.vertex_of[d];
        int e = out.edge_map[g.edge_of[d]];
        h.edge_of[nd_id] = e;
        h.mate[nd_id] = out.dart_map[g.mate[d]];
        h.edge_sign[e] = g.edge_sign[g.edge_of[d]];
        // next surviving dart in the rotation
        int x = g.rot_next[d];
        while (out.dart_map[x] < 0) x = g.rot_next[x];
        h.rot_next[nd_id] = out.dart_map[x];
        x = g.rot_prev[d];
        while (out.dart_map[x] < 0) x = g.rot_prev[x];
        h.rot_prev[nd_id] = out.dart_map[x];
    }
    for (int e = 0; e < ne; ++e) h.edge_dart[e] = -1;
    for (int d = 0; d < nd; ++d) {
        int e = h.edge_of[d];
        if (h.edge_dart[e] == -1 || h.edge_dart[e] > d) h.edge_dart[e] = d;
    }
    return out;
}

std::vector<int> vertex_components(const MoebiusGraph& g) {
    std::vector<int> comp(g.num_vertices, -1);
    int c = 0;
    for (int v0 = 0; v0 < g.num_vertices; ++v0) {
        if (comp[v0] != -1) continue;
        comp[v0] = c;
        std::vector<int> stack = {v0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d = 0; d < g.num_darts(); ++d) {
                if (g.vertex_of[d] != v) continue;
                int w = g.vertex_of[g.mate[d]];
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

int component_count(const MoebiusGraph& g) {
    auto comp = vertex_components(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

std::vector<std::pair<MoebiusGraph, std::vector<int>>> split_components(const MoebiusGraph& g) {
    auto comp = vertex_components(g);
    int nc = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<std::pair<MoebiusGraph, std::vector<int>>> out;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> vmap(g.num_vertices, -1), dmap(g.num_darts(), -1);
        int nv = 0;
        for (int v = 0; v < g.num_vertices; ++v)
            if (comp[v] == c) vmap[v] = nv++;
        int nd = 0;
        for (int d = 0; d < g.num_darts(); ++d)
            if (comp[g.vertex_of[d]] == c) dmap[d] = nd++;
        MoebiusGraph h;
        h.num_vertices = nv;
        h.vertex_of.assign(nd, -1);
        h.rot_next.assign(nd, -1);
        h.rot_prev.assign(nd, -1);
        h.mate.assign(nd, -1);
        h.edge_of.assign(nd, -1);
        std::vector<int> emap(g.num_edges(), -1);
        int ne = 0;
        for (int e = 0; e < g.num_edges(); ++e)
            if (comp[g.vertex_of[g.edge_dart[e]]] == c) emap[e] = ne++;
        h.edge_dart.assign(ne, -1);
        h.edge_sign.assign(ne, 0);
        for (int d = 0; d < g.num_darts(); ++d) {
            if (dmap[d] < 0) continue;
            int id = dmap[d];
            h.vertex_of[id] = vmap[g.vertex_of[d]];
            h.rot_next[id] = dmap[g.rot_next[d]];
            h.rot_prev[id] = dmap[g.rot_prev[d]];
            h.mate[id] = dmap[g.mate[d]];
            int e = emap[g.edge_of[d]];
            h.edge_of[id] = e;
            h.edge_sign[e] = g.edge_sign[g.edge_of[d]];
            if (h.edge_dart[e] == -1 || h.edge_dart[e] > id) h.edge_dart[e] = id;
        }
        std::vector<int> edge_map_fwd(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) edge_map_fwd[e] = emap[e];
        out.push_back({std::move(h), std::move(edge_map_fwd)});
    }
    return out;
}

std::string graph_to_json(const MoebiusGraph& g) {
    nlohmann::json j;
    std::vector<std::vector<int>> vertices(g.num_vertices);
    std::vector<char> seen(g.num_darts(), 0);
    for (int d0 = 0; d0 < g.num_darts(); ++d0) {
        if (seen[d0]) continue;
        int v = g.vertex_of[d0];
        int d = d0;
        do {
            seen[d] = 1;
            vertices[v].push_back(d);
            d = g.rot_next[d];
        } while (d != d0);
    }
    j["vertices"] = vertices;
    std::vector<std::vector<int>> pairing;
    for (int e = 0; e < g.num_edges(); ++e)
        pairing.push_back({g.edge_dart[e], g.mate[g.edge_dart[e]]});
    j["pairing"] = pairing;
    nlohmann::json signs = nlohmann::json::object();
    for (int e = 0; e < g.num_edges(); ++e) signs[std::to_string(e)] = static_cast<int>(g.edge_sign[e]);
    j["signs"] = signs;
    j["faceLabels"] = g.face_labels;
    return j.dump();
}

MoebiusGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::vector<int>> vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
    std::vector<std::pair<int, int>> pairing;
    for (const auto& p : j.at("pairing")) pairing.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    std::vector<uint8_t> signs(pairing.size(), 0);
    for (const auto& [k, v] : j.at("signs").items()) signs.at(std::stoul(k)) = v.get<int>() ? 1 : 0;
    std::vector<int> labels;
    if (j.contains("faceLabels")) labels = j.at("faceLabels").get<std::vector<int>>();
    MoebiusGraph g = MoebiusGraph::build(vertices, pairing, signs, labels);
    g.check_well_formed();
    return g;
}

}  // namespace mg

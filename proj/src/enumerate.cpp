#include "moebius/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace mg {

int& worker_count() {
    static int w = omp_get_max_threads();
    return w;
}

int effective_threads(int threads) {
    int t = threads > 0 ? threads : worker_count();
    return t < 1 ? 1 : t;
}

void run_tasks(int64_t n, const std::function<void(int64_t, int)>& fn, int threads) {
    int t = effective_threads(threads);
    if (t == 1) {
        for (int64_t i = 0; i < n; ++i) fn(i, 0);
        return;
    }
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (int64_t i = 0; i < n; ++i) fn(i, omp_get_thread_num());
}

namespace {

// nonincreasing sequences of V parts >= 3 summing to total, lexicographically
// decreasing
void degree_partitions(int total, int parts, int maxdeg, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int d = std::min(maxdeg, total - 3 * (parts - 1)); d >= 3; --d) {
        cur.push_back(d);
        degree_partitions(total - d, parts - 1, d, cur, out);
        cur.pop_back();
    }
}

struct Layout {
    std::vector<int> degrees;      // per-vertex, in block order (a composition)
    std::vector<int> block_start;  // vertex -> first dart
};

// rotation fixed to the block cycle: darts of vertex v are
// [block_start, block_start + deg) in rotation order
MoebiusGraph graph_from_matching(const Layout& lay, const std::vector<int>& mate,
                                 const std::vector<int>& edge_of,
                                 const std::vector<uint8_t>& signs) {
    int nd = static_cast<int>(mate.size());
    MoebiusGraph g;
    g.num_vertices = static_cast<int>(lay.degrees.size());
    g.vertex_of.assign(nd, -1);
    g.rot_next.assign(nd, -1);
    g.rot_prev.assign(nd, -1);
    g.mate = mate;
    g.edge_of = edge_of;
    g.edge_sign = signs;
    int ne = nd / 2;
    g.edge_dart.assign(ne, nd);
    for (int v = 0; v < g.num_vertices; ++v) {
        int s = lay.block_start[v], deg = lay.degrees[v];
        for (int i = 0; i < deg; ++i) {
            int d = s + i;
            g.vertex_of[d] = v;
            g.rot_next[d] = s + (i + 1) % deg;
            g.rot_prev[d] = s + (i + deg - 1) % deg;
        }
    }
    for (int d = 0; d < nd; ++d) g.edge_dart[edge_of[d]] = std::min(g.edge_dart[edge_of[d]], d);
    return g;
}

struct MatchingEnumerator {
    const Layout& lay;
    int nd = 0;
    std::vector<int> mate;
    std::function<void(const std::vector<int>&)> sink;

    explicit MatchingEnumerator(const Layout& l) : lay(l) {
        for (int d : lay.degrees) nd += d;
        mate.assign(nd, -1);
    }

    void run(int first_partner_of_zero) {
        mate[0] = first_partner_of_zero;
        mate[first_partner_of_zero] = 0;
        rec(1);
        mate[first_partner_of_zero] = -1;
        mate[0] = -1;
    }

    void rec(int from) {
        int x = from;
        while (x < nd && mate[x] != -1) ++x;
        if (x == nd) {
            sink(mate);
            return;
        }
        for (int y = x + 1; y < nd; ++y) {
            if (mate[y] != -1) continue;
            mate[x] = y;
            mate[y] = x;
            rec(x + 1);
            mate[x] = -1;
            mate[y] = -1;
        }
    }
};

// spanning tree of the identity BFS walk
void bfs_tree_edges(const MoebiusGraph& g, std::vector<char>& is_tree_edge) {
    is_tree_edge.assign(g.num_edges(), 0);
    std::vector<char> vseen(g.num_vertices, 0);
    vseen[g.vertex_of[0]] = 1;
    std::vector<int> entry = {0};
    for (size_t i = 0; i < entry.size(); ++i) {
        int d0 = entry[i];
        int x = d0;
        do {
            int y = g.mate[x];
            int w = g.vertex_of[y];
            if (!vseen[w]) {
                vseen[w] = 1;
                is_tree_edge[g.edge_of[x]] = 1;
                entry.push_back(y);
            }
            x = g.rot_next[x];
        } while (x != d0);
    }
}

using Bucket = std::map<std::pair<int, int>, std::map<Code, MoebiusGraph>>;

// Every isomorphism class has a representative whose dart numbering is
// reproduced by the BFS from dart 0 and whose signs vanish on the BFS tree,
// so it suffices to keep BFS-identity matchings and enumerate signs on the
// non-tree edges. Duplicates collapse through the canonical code.
void process_matching(const Layout& lay, const std::vector<int>& mate, Bucket& bucket,
                      EncodeScratch& scratch) {
    int nd = static_cast<int>(mate.size());
    int ne = nd / 2;
    std::vector<int> edge_of(nd, -1);
    int e = 0;
    for (int d = 0; d < nd; ++d)
        if (edge_of[d] == -1) {
            edge_of[d] = edge_of[mate[d]] = e++;
        }
    std::vector<uint8_t> signs(ne, 0);
    MoebiusGraph base = graph_from_matching(lay, mate, edge_of, signs);
    if (!bfs_identity_canonical(base)) return;

    std::vector<char> is_tree;
    bfs_tree_edges(base, is_tree);
    std::vector<int> free_edges;
    for (int i = 0; i < ne; ++i)
        if (!is_tree[i]) free_edges.push_back(i);

    for (unsigned mask = 0; mask < (1u << free_edges.size()); ++mask) {
        MoebiusGraph g = base;
        for (size_t i = 0; i < free_edges.size(); ++i)
            if (mask & (1u << i)) g.edge_sign[free_edges[i]] = 1;
        auto [twog, n] = graph_type(g);
        Code code = encode_seed(g, 0, 0, false, scratch);
        for (int d = 0; d < g.num_darts(); ++d)
            for (int r = 0; r < 2; ++r) {
                if (d == 0 && r == 0) continue;
                Code c = encode_seed(g, d, r, false, scratch);
                if (c < code) code = std::move(c);
            }
        bucket[{twog, n}].emplace(std::move(code), g);
    }
}

std::mutex cache_mutex;
std::map<int, UnlabelledBuckets> unlabelled_cache;

UnlabelledBuckets compute_unlabelled(int chi, const EnumerateOptions& opts) {
    std::vector<std::pair<Layout, int>> tasks;  // (layout, partner of dart 0)
    for (int V = 1; V <= 2 * chi; ++V) {
        int E = V + chi;
        std::vector<std::vector<int>> partitions;
        std::vector<int> cur;
        degree_partitions(2 * E, V, 2 * E, cur, partitions);
        for (const auto& part : partitions) {
            std::vector<int> comp = part;
            std::sort(comp.begin(), comp.end());
            do {
                Layout lay;
                lay.degrees = comp;
                lay.block_start.resize(V);
                int s = 0;
                for (int v = 0; v < V; ++v) {
                    lay.block_start[v] = s;
                    s += comp[v];
                }
                for (int y = 1; y < 2 * E; ++y) tasks.push_back({lay, y});
            } while (std::next_permutation(comp.begin(), comp.end()));
        }
    }
    if (opts.shuffle_seed) {
        SplitMix rng(opts.shuffle_seed);
        for (size_t i = tasks.size(); i > 1; --i)
            std::swap(tasks[i - 1], tasks[rng.next() % i]);
    }

    int nthreads = effective_threads(opts.threads);
    std::vector<Bucket> partial(nthreads);
    run_tasks(
        static_cast<int64_t>(tasks.size()),
        [&](int64_t i, int slot) {
            const auto& [lay, y0] = tasks[i];
            MatchingEnumerator me(lay);
            EncodeScratch scratch;
            me.sink = [&](const std::vector<int>& m) {
                process_matching(lay, m, partial[slot], scratch);
            };
            me.run(y0);
        },
        opts.threads);

    Bucket merged;
    for (auto& b : partial)
        for (auto& [type, m] : b)
            for (auto& [key, g] : m) merged[type].emplace(key, g);

    UnlabelledBuckets out;
    for (auto& [type, m] : merged)
        for (auto& [key, g] : m) out[type].push_back(g);
    return out;
}

}  // namespace

const UnlabelledBuckets& enumerate_unlabelled(int chi, const EnumerateOptions& opts) {
    if (chi < 1) throw PreconditionError("enumerate: 2g-2+n must be positive");
    if (chi > opts.budget && !opts.force)
        throw BudgetError("enumerate: 2g-2+n = " + std::to_string(chi) + " exceeds budget " +
                          std::to_string(opts.budget));
    if (!opts.fresh) {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = unlabelled_cache.find(chi);
        if (it != unlabelled_cache.end()) return it->second;
    }
    UnlabelledBuckets result = compute_unlabelled(chi, opts);
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto [it, inserted] = unlabelled_cache.insert_or_assign(chi, std::move(result));
    return it->second;
}

GraphInventory enumerate_graphs(int two_g, int n, const EnumerateOptions& opts) {
    if (n < 1 || two_g < 0) throw PreconditionError("enumerate: bad type");
    int chi = two_g - 2 + n;
    const UnlabelledBuckets& buckets = enumerate_unlabelled(chi, opts);
    GraphInventory inv;
    inv.two_g = two_g;
    inv.n = n;
    auto it = buckets.find({two_g, n});
    if (it == buckets.end()) return inv;

    std::map<Code, MoebiusGraph> labelled;
    for (const MoebiusGraph& rep : it->second) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            MoebiusGraph g = rep;
            g.face_labels = perm;
            labelled.emplace(canonical_code(g), g);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (auto& [key, g] : labelled) {
        InventoryEntry ent;
        ent.graph = g;
        ent.code = key;
        ent.aut_order = automorphism_order(g);
        ent.num_edges = g.num_edges();
        ent.orientable = is_orientable(g);
        inv.entries.push_back(std::move(ent));
    }
    return inv;
}

GraphInventory trivalent_subset(const GraphInventory& inv) {
    GraphInventory out;
    out.two_g = inv.two_g;
    out.n = inv.n;
    for (const auto& ent : inv.entries) {
        bool tri = true;
        for (int v = 0; v < ent.graph.num_vertices && tri; ++v)
            tri = ent.graph.degree(v) == 3;
        if (tri) out.entries.push_back(ent);
    }
    return out;
}

}  // namespace mg

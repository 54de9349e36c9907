#include "moebius/quasipoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace mg {

namespace {

// base point of the sampling grid: the chamber witness scaled until the whole
// grid (plus the out-of-grid verification offsets) clears every wall, then
// nudged onto the requested parity class
LVec grid_base(const Arrangement& arr, const Chamber& ch, int parity_mask, int d) {
    int n = arr.n;
    long t = -1;
    for (const auto& f : arr.forms) {
        long v = std::abs(f.eval_int(ch.witness));
        t = t < 0 ? v : std::min(t, v);
    }
    if (arr.forms.empty()) t = 1;
    long need = 2L * n * (d + 3) + n + 1;
    long m = (need + t - 1) / t;
    LVec base(n);
    for (int i = 0; i < n; ++i) {
        base[i] = m * ch.witness[i];
        if ((base[i] & 1) != ((parity_mask >> i) & 1)) ++base[i];
    }
    return base;
}

struct GridValues {
    int n, d;
    std::vector<BPoly> v;  // flat tensor, strides d+1 per axis
    size_t index(const std::vector<int>& k) const {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * (d + 1) + k[i];
        return idx;
    }
};

MPoly newton_interpolate(const LVec& base, GridValues& gv) {
    int n = gv.n, d = gv.d;
    // in-place divided differences along each axis (uniform step 2)
    size_t total = gv.v.size();
    for (int axis = 0; axis < n; ++axis) {
        size_t stride = 1;
        for (int i = axis + 1; i < n; ++i) stride *= d + 1;
        size_t block = stride * (d + 1);
        for (size_t start = 0; start < total; start += block) {
            for (size_t off = 0; off < stride; ++off) {
                BPoly* col = gv.v.data() + start + off;
                for (int j = 1; j <= d; ++j)
                    for (int m = d; m >= j; --m) {
                        col[m * stride] -= col[(m - 1) * stride];
                        col[m * stride] /= Rat(2 * j);
                    }
            }
        }
    }
    // expand the Newton basis exactly
    std::vector<std::vector<std::vector<Rat>>> nb(n);  // nb[i][j] = coeffs of prod_{t<j}(X_i - base_i - 2t)
    for (int i = 0; i < n; ++i) {
        nb[i].resize(d + 1);
        nb[i][0] = {Rat(1)};
        for (int j = 1; j <= d; ++j) {
            const auto& prev = nb[i][j - 1];
            std::vector<Rat> cur(prev.size() + 1, Rat(0));
            Rat root = Rat(base[i] + 2 * (j - 1));
            for (size_t k = 0; k < prev.size(); ++k) {
                cur[k + 1] += prev[k];
                cur[k] -= prev[k] * root;
            }
            nb[i][j] = std::move(cur);
        }
    }
    MPoly out(n);
    std::vector<int> k(n, 0);
    while (true) {
        const BPoly& c = gv.v[gv.index(k)];
        if (!c.is_zero()) {
            // tensor product of the univariate Newton factors
            MPoly m = MPoly::constant(n, c);
            for (int i = 0; i < n; ++i) {
                MPoly xi(n);
                std::vector<int> e(n, 0);
                for (size_t p = 0; p < nb[i][k[i]].size(); ++p) {
                    if (nb[i][k[i]][p] == 0) continue;
                    e[i] = static_cast<int>(p);
                    xi.terms[e] = BPoly(nb[i][k[i]][p]);
                }
                m *= xi;
            }
            out += m;
        }
        int i = n - 1;
        while (i >= 0 && k[i] == d) k[i--] = 0;
        if (i < 0) break;
        ++k[i];
    }
    return out;
}

}  // namespace

QuasiPoly reconstruct(int two_g, int n, CountTable* table, const ReconstructOptions& opts) {
    int chi = two_g - 2 + n;
    if (chi < 1) throw PreconditionError("reconstruct: unstable type");
    if (chi > opts.budget && !opts.force)
        throw BudgetError("reconstruct: 2g-2+n exceeds budget");
    const Arrangement& arr = arrangement(n);
    QuasiPoly qp;
    qp.two_g = two_g;
    qp.n = n;
    qp.degree = 3 * two_g - 6 + 2 * n;
    int d = qp.degree;
    int nch = static_cast<int>(arr.chambers.size());
    qp.polys.assign(1 << n, std::vector<MPoly>(nch, MPoly(n)));

    // group (parity, chamber) pairs into orbits of the simultaneous
    // coordinate permutation action; interpolate one representative per orbit
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::pair<int, int>>> orbit_of(1 << n,
                                                           std::vector<std::pair<int, int>>(nch));
    std::vector<char> is_rep(static_cast<size_t>(1 << n) * nch, 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int mask = 0; mask < (1 << n); ++mask) {
        for (int c = 0; c < nch; ++c) {
            // canonical image over all permutations
            std::pair<int, int> best{mask, c};
            std::vector<int> best_perm = perms[0];
            for (const auto& p : perms) {
                // coordinates move by i -> p[i]
                int pmask = 0;
                std::vector<long> w(n);
                for (int i = 0; i < n; ++i) {
                    if (mask & (1 << i)) pmask |= 1 << p[i];
                    w[p[i]] = arr.chambers[c].witness[i];
                }
                int pc = arr.locate_int(w);
                if (std::pair<int, int>{pmask, pc} < best) {
                    best = {pmask, pc};
                    best_perm = p;
                }
            }
            orbit_of[mask][c] = best;
            if (best == std::pair<int, int>{mask, c}) is_rep[mask * nch + c] = 1;
        }
    }

    // interpolate representatives
    for (int mask = 0; mask < (1 << n); ++mask) {
        for (int c = 0; c < nch; ++c) {
            if (!is_rep[mask * nch + c]) continue;
            LVec base = grid_base(arr, arr.chambers[c], mask, d);
            GridValues gv;
            gv.n = n;
            gv.d = d;
            size_t total = 1;
            for (int i = 0; i < n; ++i) total *= d + 1;
            gv.v.resize(total);
            std::vector<int> k(n, 0);
            LVec pt(n);
            while (true) {
                for (int i = 0; i < n; ++i) pt[i] = base[i] + 2 * k[i];
                gv.v[gv.index(k)] = count_recursive(two_g, n, pt, table);
                int i = n - 1;
                while (i >= 0 && k[i] == d) k[i--] = 0;
                if (i < 0) break;
                ++k[i];
            }
            qp.polys[mask][c] = newton_interpolate(base, gv);
        }
    }

    // materialize the rest of each orbit by permuting the representative
    for (int mask = 0; mask < (1 << n); ++mask) {
        for (int c = 0; c < nch; ++c) {
            if (is_rep[mask * nch + c]) continue;
            auto [rmask, rc] = orbit_of[mask][c];
            // find a permutation sending the representative to (mask, c)
            bool done = false;
            for (const auto& p : perms) {
                int pmask = 0;
                std::vector<long> w(n);
                for (int i = 0; i < n; ++i) {
                    if (rmask & (1 << i)) pmask |= 1 << p[i];
                    w[p[i]] = arr.chambers[rc].witness[i];
                }
                if (pmask == mask && arr.locate_int(w) == c) {
                    qp.polys[mask][c] = qp.polys[rmask][rc].permuted(p);
                    done = true;
                    break;
                }
            }
            if (!done) throw std::logic_error("orbit reconstruction failed");
        }
    }

    // verify every chamber and parity class on out-of-grid samples
    int extra = opts.verify_samples >= 0 ? opts.verify_samples : d + 2;
    SplitMix rng(opts.seed);
    for (int mask = 0; mask < (1 << n); ++mask) {
        for (int c = 0; c < nch; ++c) {
            LVec base = grid_base(arr, arr.chambers[c], mask, d);
            for (int s = 0; s < extra; ++s) {
                LVec pt(n);
                for (int i = 0; i < n; ++i)
                    pt[i] = base[i] + 2 * static_cast<long>(rng.next() % (d + 3));
                BPoly want = count_recursive(two_g, n, pt, table);
                std::vector<Rat> x(pt.begin(), pt.end());
                if (qp.polys[mask][c].eval(x) != want)
                    throw CrossCheckError("interpolation residual nonzero");
            }
        }
    }
    return qp;
}

namespace {
std::mutex qp_cache_mutex;
std::map<std::pair<int, int>, QuasiPoly> qp_cache;
}  // namespace

const QuasiPoly& reconstruct_cached(int two_g, int n, CountTable* table,
                                    const ReconstructOptions& opts) {
    {
        std::lock_guard<std::mutex> lk(qp_cache_mutex);
        auto it = qp_cache.find({two_g, n});
        if (it != qp_cache.end()) return it->second;
    }
    QuasiPoly fresh = reconstruct(two_g, n, table, opts);
    std::lock_guard<std::mutex> lk(qp_cache_mutex);
    auto [it, ok] = qp_cache.emplace(std::pair<int, int>{two_g, n}, std::move(fresh));
    return it->second;
}

BPoly qp_evaluate(const QuasiPoly& qp, const std::vector<Rat>& L, const std::vector<int>& parity) {
    const Arrangement& arr = arrangement(qp.n);
    int mask = 0;
    for (int i = 0; i < qp.n; ++i)
        if (parity[i]) mask |= 1 << i;
    int c = arr.locate(L);
    return qp.polys[mask][c].eval(L);
}

BPoly qp_evaluate_int(const QuasiPoly& qp, const LVec& L) {
    std::vector<Rat> x(L.begin(), L.end());
    std::vector<int> parity(qp.n);
    for (int i = 0; i < qp.n; ++i) parity[i] = static_cast<int>(L[i] & 1);
    return qp_evaluate(qp, x, parity);
}

std::vector<MPoly> leading_part(const QuasiPoly& qp) {
    const Arrangement& arr = arrangement(qp.n);
    int nch = static_cast<int>(arr.chambers.size());
    std::vector<MPoly> out(nch, MPoly(qp.n));
    for (int c = 0; c < nch; ++c) {
        bool have = false;
        for (int mask = 0; mask < (1 << qp.n); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
            MPoly top = qp.polys[mask][c].homogeneous_part(qp.degree);
            if (!have) {
                out[c] = top;
                have = true;
            } else if (out[c] != top) {
                throw CrossCheckError("parity classes disagree at top degree");
            }
        }
        if (out[c].is_zero()) throw CrossCheckError("leading part vanishes");
    }
    return out;
}

}  // namespace mg

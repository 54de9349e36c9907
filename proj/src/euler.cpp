#include "moebius/euler.hpp"

#include <mutex>

#include "moebius/chambers.hpp"
#include "moebius/errors.hpp"
#include "moebius/lattice.hpp"

namespace mg {

BPoly LaurentS::substitute_beta() const {
    BPoly out;
    BPoly one_plus_b = BPoly(1) + BPoly::b();
    for (const auto& [e, v] : c) {
        if (e % 2 != 0 || e > 0)
            throw CrossCheckError("Laurent element has no beta substitution");
        BPoly pw(1);
        for (int j = 0; j < -e / 2; ++j) pw *= one_plus_b;
        out += pw * v;
    }
    return out;
}

const std::vector<Rat>& bernoulli_numbers(int upto) {
    static std::mutex mu;
    static std::vector<Rat> cache = {Rat(1)};
    std::lock_guard<std::mutex> lk(mu);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    while (static_cast<int>(cache.size()) <= upto) {
        int m = static_cast<int>(cache.size());
        Rat sum(0);
        Rat binom(1);  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            sum += binom * cache[j];
            binom = binom * Rat(m + 1 - j) / Rat(j + 1);
        }
        cache.push_back(-sum / Rat(m + 1));
    }
    return cache;
}

LaurentS double_bernoulli(int k) {
    if (k < 0) throw PreconditionError("double_bernoulli: negative index");
    const auto& bern = bernoulli_numbers(k);
    // k! sum_{i+j=k} (B_i s^{i-1} / i!) (B_j (-1)^{j-1} s^{-(j-1)} / j!)
    LaurentS out;
    Rat kfact(1);
    for (int i = 2; i <= k; ++i) kfact *= i;
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        if (bern[i] == 0 || bern[j] == 0) continue;
        Rat ifact(1), jfact(1);
        for (int t = 2; t <= i; ++t) ifact *= t;
        for (int t = 2; t <= j; ++t) jfact *= t;
        Rat coef = kfact * bern[i] * bern[j] / (ifact * jfact);
        if ((j - 1) % 2 != 0) coef = -coef;
        out += LaurentS::mono(i - j, coef);
    }
    return out;
}

BPoly chi_graph_sum(int two_g, int n, MonCache* cache, const EnumerateOptions& opts) {
    GraphInventory inv = enumerate_graphs(two_g, n, opts);
    MonCache local;
    MonCache* mc = cache ? cache : &local;
    BPoly total;
    for (const auto& ent : inv.entries) {
        BPoly avg = average_mon(ent.graph, mc);
        int dim = ent.num_edges - n;
        if (dim % 2 != 0) avg *= rat(-1);
        total += avg / Rat(ent.aut_order);
    }
    return total;
}

namespace {

// exact Lagrange extrapolation to t = 0 from samples along the ray t * v
BPoly ray_constant_term(int two_g, int n, const LVec& v, CountTable* table) {
    int d = 3 * two_g - 6 + 2 * n;
    std::vector<BPoly> samples;
    for (int t = 1; t <= d + 1; ++t) {
        LVec pt(n);
        for (int i = 0; i < n; ++i) pt[i] = t * v[i];
        samples.push_back(count_recursive(two_g, n, pt, table));
    }
    BPoly out;
    for (int t = 1; t <= d + 1; ++t) {
        Rat w(1);
        for (int u = 1; u <= d + 1; ++u) {
            if (u == t) continue;
            w *= Rat(-u) / Rat(t - u);
        }
        out += samples[t - 1] * w;
    }
    return out;
}

}  // namespace

BPoly chi_constant_term(int two_g, int n, CountTable* table) {
    int chi = two_g - 2 + n;
    if (chi < 1) throw PreconditionError("chi_constant_term: unstable type");
    if (chi <= 2 && n <= 4) {
        const QuasiPoly& qp = reconstruct_cached(two_g, n, table);
        const Arrangement& arr = arrangement(n);
        std::vector<Rat> zero(n, Rat(0));
        BPoly value = qp.polys[0][0].eval(zero);
        for (size_t c = 1; c < arr.chambers.size(); ++c)
            if (qp.polys[0][c].eval(zero) != value)
                throw CrossCheckError("chambers disagree at the origin");
        return value;
    }
    // deep types: extrapolate along two rays in different chambers; every
    // wall passes through the origin, so both limits must agree
    LVec v1(n), v2(n);
    for (int i = 0; i < n; ++i) v1[i] = 2L << i;  // distinct powers of two: off every wall
    for (int i = 0; i < n; ++i) v2[i] = 2L << (n - 1 - i);
    BPoly a = ray_constant_term(two_g, n, v1, table);
    if (n > 1) {
        BPoly b = ray_constant_term(two_g, n, v2, table);
        if (a != b) throw CrossCheckError("ray limits disagree at the origin");
    }
    return a;
}

BPoly chi_closed_form(int two_g, int n) {
    int chi = two_g - 2 + n;
    if (chi < 1) throw PreconditionError("chi_closed_form: unstable type");
    if (n < 0) throw PreconditionError("chi_closed_form: negative n");
    LaurentS top = double_bernoulli(two_g);
    // Gamma(2g-2+n) / (2 (2g)!), then divide by beta^g
    Rat gamma(1);
    for (int i = 2; i <= chi - 1; ++i) gamma *= i;
    Rat fact(1);
    for (int i = 2; i <= two_g; ++i) fact *= i;
    LaurentS assembled = top.shifted(-two_g);
    BPoly out = assembled.substitute_beta();
    out *= gamma / (2 * fact);
    if (n % 2 != 0) out *= rat(-1);
    return out;
}

std::pair<Rat, Rat> chi_specializations(int two_g, int n) {
    BPoly chi = chi_closed_form(two_g, n);
    Rat at0 = chi.eval(rat(0));
    Rat at1 = chi.eval(rat(1));
    Rat chi_m = 2 * at0;
    Rat chi_k = rat_pow(Rat(2), static_cast<unsigned>(n)) * (at1 - at0);
    return {chi_m, chi_k};
}

bool s_series_check(int two_g, int n, int truncation, CountTable* table, MonCache* cache) {
    GraphInventory inv = enumerate_graphs(two_g, n);
    MonCache local;
    MonCache* mc = cache ? cache : &local;
    // right side: sum over graphs of <rho>/|Aut| (z^2/(1-z^2))^E
    std::vector<BPoly> rhs(truncation + 1);
    for (const auto& ent : inv.entries) {
        BPoly w = average_mon(ent.graph, mc) / Rat(ent.aut_order);
        int e = ent.num_edges;
        for (int half = e; 2 * half <= truncation; ++half) {
            // C(half-1, e-1)
            Rat binom(1);
            for (int i = 1; i <= e - 1; ++i) binom = binom * Rat(half - i) / Rat(i);
            rhs[2 * half] += w * binom;
        }
    }
    // left side: sum over boundary tuples
    std::vector<BPoly> lhs(truncation + 1);
    LVec cur;
    auto sweep = [&](auto&& self, long left) -> void {
        if (static_cast<int>(cur.size()) == n) {
            long total = lsum(cur);
            lhs[total] += count_recursive(two_g, n, cur, table);
            return;
        }
        long slots = n - static_cast<long>(cur.size());
        for (long v = 1; v + (slots - 1) <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    sweep(sweep, truncation);
    for (int k = 0; k <= truncation; ++k) {
        if (k % 2 == 1 && (!lhs[k].is_zero() || !rhs[k].is_zero())) return false;
        if (lhs[k] != rhs[k]) return false;
    }
    return true;
}

}  // namespace mg

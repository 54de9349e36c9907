#pragma once

#include <map>

#include "moebius/enumerate.hpp"
#include "moebius/mon.hpp"
#include "moebius/quasipoly.hpp"

namespace mg {

// Laurent polynomial in the formal square root s of beta; substituting
// beta = 1/(1+b) turns even nonpositive s-degrees into a polynomial in b.
struct LaurentS {
    std::map<int, Rat> c;  // exponent of s -> coefficient
    static LaurentS mono(int e, const Rat& v) {
        LaurentS p;
        if (v != 0) p.c[e] = v;
        return p;
    }
    LaurentS& operator+=(const LaurentS& o) {
        for (const auto& [e, v] : o.c) {
            auto& slot = c[e];
            slot += v;
            if (slot == 0) c.erase(e);
        }
        return *this;
    }
    friend LaurentS operator*(const LaurentS& a, const LaurentS& b) {
        LaurentS r;
        for (const auto& [ea, va] : a.c)
            for (const auto& [eb, vb] : b.c) {
                auto& slot = r.c[ea + eb];
                slot += va * vb;
                if (slot == 0) r.c.erase(ea + eb);
            }
        return r;
    }
    LaurentS shifted(int by) const {
        LaurentS r;
        for (const auto& [e, v] : c) r.c[e + by] = v;
        return r;
    }
    // requires every exponent even and nonpositive; s^{-2j} -> (1+b)^j
    BPoly substitute_beta() const;
};

// exact Bernoulli numbers B_0..B_upto (B_1 = -1/2)
const std::vector<Rat>& bernoulli_numbers(int upto);

// B_{2,k}(0 | s, -1/s), the k-th coefficient of w^2 e^{0}/((e^{sw}-1)(e^{-w/s}-1))
LaurentS double_bernoulli(int k);

BPoly chi_graph_sum(int two_g, int n, MonCache* cache = nullptr,
                    const EnumerateOptions& opts = {});
// N^{[0]}_{g,n}(0); via the reconstructed quasipolynomial when 2g-2+n <= 2,
// else by exact extrapolation to zero along rays through chamber interiors
BPoly chi_constant_term(int two_g, int n, CountTable* table);
BPoly chi_closed_form(int two_g, int n);

// chi(M_{g,n}) = 2 chi(0); chi(K_{g,n}) = 2^n (chi(1) - chi(0))
std::pair<Rat, Rat> chi_specializations(int two_g, int n);

// resummation identity: sum_L N(L) z^{sum L} = sum_G <rho_G>/|Aut| (z^2/(1-z^2))^{|E|},
// compared coefficient-by-coefficient to order T
bool s_series_check(int two_g, int n, int truncation, CountTable* table,
                    MonCache* cache = nullptr);

}  // namespace mg

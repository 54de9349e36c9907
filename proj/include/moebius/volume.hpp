#pragma once

#include <vector>

#include "moebius/quasipoly.hpp"

namespace mg {

// univariate polynomial with BPoly coefficients (c[k] multiplies t^k)
struct Poly1 {
    std::vector<BPoly> c;
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    BPoly eval(const Rat& t) const {
        BPoly out;
        for (size_t i = c.size(); i-- > 0;) out = out * BPoly(t) + c[i];
        return out;
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        Poly1 r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, BPoly());
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    Poly1& operator+=(const Poly1& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    // definite integral over [a, b]
    BPoly integrate(const Rat& a, const Rat& b) const {
        BPoly out;
        for (size_t k = 0; k < c.size(); ++k)
            out += c[k] * ((rat_pow(b, static_cast<unsigned>(k + 1)) -
                            rat_pow(a, static_cast<unsigned>(k + 1))) /
                           Rat(static_cast<long>(k + 1)));
        return out;
    }
};

// continuous piecewise polynomial on [breakpoints.front(), breakpoints.back()]
struct PiecewisePoly1 {
    std::vector<Rat> breakpoints;      // sorted, size k+1
    std::vector<Poly1> segments;       // size k
    BPoly integrate() const {
        BPoly out;
        for (size_t s = 0; s < segments.size(); ++s)
            out += segments[s].integrate(breakpoints[s], breakpoints[s + 1]);
        return out;
    }
};

// a refined volume: homogeneous polynomial of degree 6g-6+2n per chamber
struct VolumePoly {
    int two_g = 0, n = 0, degree = 0;
    std::vector<MPoly> per_chamber;  // indexed like arrangement(n).chambers
};

BPoly volume_base(int two_g, int n, const std::vector<Rat>& L);

// V = leading part of N scaled by 2^{2g-2+n}/2; base topologies are returned
// in the same shape from their closed forms
VolumePoly volume_from_counts(int two_g, int n, CountTable* table);

BPoly volume_eval(const VolumePoly& v, const std::vector<Rat>& L);

// right-hand side of the volume recursion, by exact piecewise integration;
// refuses base topologies and points on integrand walls
BPoly volume_rhs(int two_g, int n, const std::vector<Rat>& L, CountTable* table);

// series-level verification of the Laplace identification at a base topology
bool airy_laplace_check(int two_g, int n);

}  // namespace mg

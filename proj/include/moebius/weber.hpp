#pragma once

#include <map>
#include <optional>

#include "moebius/bpoly.hpp"
#include "moebius/lattice.hpp"

namespace mg {

// exact polynomial division; nullopt if the division leaves a remainder
std::optional<BPoly> bpoly_exact_div(const BPoly& num, const BPoly& den);

// rational function of b, held unreduced (denominators here are only powers
// of (1+b) and constants, so sizes stay small)
struct BRat {
    BPoly num;
    BPoly den = BPoly(1);
    static BRat of(const BPoly& p) { return {p, BPoly(1)}; }
    bool is_zero() const { return num.is_zero(); }
    BRat operator+(const BRat& o) const { return {num * o.den + o.num * den, den * o.den}; }
    BRat operator-(const BRat& o) const { return {num * o.den - o.num * den, den * o.den}; }
    BRat operator*(const BRat& o) const { return {num * o.num, den * o.den}; }
    BRat& operator+=(const BRat& o) { return *this = *this + o; }
    bool equals(const BRat& o) const { return (num * o.den - o.num * den).is_zero(); }
};

// elements a + c*bfrak of the coefficient ring, bfrak^2 = b^2/(1+b)
struct Coeff {
    BRat a, c;
    static Coeff scalar(const Rat& r) { return {BRat::of(BPoly(r)), BRat::of(BPoly())}; }
    static Coeff bfrak() { return {BRat::of(BPoly()), BRat::of(BPoly(1))}; }
    bool is_zero() const { return a.is_zero() && c.is_zero(); }
    Coeff operator+(const Coeff& o) const { return {a + o.a, c + o.c}; }
    Coeff operator-(const Coeff& o) const { return {a - o.a, c - o.c}; }
    Coeff operator*(const Coeff& o) const {
        BRat bb{BPoly::b(2), BPoly(1) + BPoly::b()};
        return {a * o.a + c * o.c * bb, a * o.c + c * o.a};
    }
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
};

// multivariate power series truncated at total degree <= cap per variable
struct TruncatedSeries {
    int n = 0, cap = 0;
    std::map<std::vector<int>, Coeff> terms;

    TruncatedSeries(int nvars, int degree_cap) : n(nvars), cap(degree_cap) {}
    void add(const std::vector<int>& e, const Coeff& c);
    const Coeff* find(const std::vector<int>& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? nullptr : &it->second;
    }
    TruncatedSeries mul(const TruncatedSeries& o) const;
    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        for (const auto& [e, c] : o.terms) add(e, c);
        return *this;
    }
    TruncatedSeries derivative(int var) const;
    TruncatedSeries scaled(const Coeff& s) const;
    // expansion of (1 - z^u)^{-power} for a monomial exponent u
    static TruncatedSeries geometric(int nvars, int degree_cap, const std::vector<int>& u,
                                     int power);
};

// the printed correlators at mu = -1, as series of the underlying function
// (the exterior derivatives and overall sign applied)
TruncatedSeries weber_base_series(int two_g, int n, int truncation);

// invert the discrete Laplace transform: counts from series coefficients
std::map<LVec, BPoly> extract_counts(const TruncatedSeries& s, int two_g, int n);

}  // namespace mg

#pragma once

#include <map>
#include <string>
#include <vector>

#include "moebius/bpoly.hpp"

namespace mg {

// Multivariate polynomial in L_1..L_n with BPoly coefficients, sparse by
// exponent vector.
struct MPoly {
    int n = 0;
    std::map<std::vector<int>, BPoly> terms;

    MPoly() = default;
    explicit MPoly(int nvars) : n(nvars) {}

    static MPoly constant(int nvars, const BPoly& c) {
        MPoly p(nvars);
        if (!c.is_zero()) p.terms[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static MPoly var(int nvars, int i) {
        MPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms[e] = BPoly(1);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms) {
            auto& slot = terms[e];
            slot += c;
            if (slot.is_zero()) terms.erase(e);
        }
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms) {
            auto& slot = terms[e];
            slot -= c;
            if (slot.is_zero()) terms.erase(e);
        }
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.n);
        std::vector<int> e(a.n);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
                auto& slot = r.terms[e];
                slot += ca * cb;
                if (slot.is_zero()) r.terms.erase(e);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& scale(const BPoly& c) {
        if (c.is_zero()) {
            terms.clear();
            return *this;
        }
        for (auto& [e, coef] : terms) coef *= c;
        return *this;
    }
    MPoly& scale(const Rat& c) { return scale(BPoly(c)); }

    bool operator==(const MPoly& o) const { return terms == o.terms; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    BPoly eval(const std::vector<Rat>& x) const {
        BPoly out;
        for (const auto& [e, c] : terms) {
            Rat m(1);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) m *= x[i];
            out += c * m;
        }
        return out;
    }

    MPoly homogeneous_part(int d) const {
        MPoly out(n);
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            if (s == d) out.terms.emplace(e, c);
        }
        return out;
    }

    // image under a coordinate permutation: (perm . P)(L) = P(L o perm),
    // i.e. the new exponent of variable perm[i] is the old exponent of i
    MPoly permuted(const std::vector<int>& perm) const {
        MPoly out(n);
        std::vector<int> e2(n);
        for (const auto& [e, c] : terms) {
            for (int i = 0; i < n; ++i) e2[perm[i]] = e[i];
            out.terms.emplace(e2, c);
        }
        return out;
    }

    MPoly pow(int k) const {
        MPoly r = constant(n, BPoly(1));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (int i = 0; i < n; ++i)
                if (e[i]) s += " L" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        }
        return s;
    }
};

}  // namespace mg

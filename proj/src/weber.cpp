#include "moebius/weber.hpp"

#include "moebius/errors.hpp"

namespace mg {

std::optional<BPoly> bpoly_exact_div(const BPoly& num, const BPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return BPoly();
    std::vector<Rat> rem = num.coeffs();
    int dn = den.degree();
    if (num.degree() < dn) return std::nullopt;
    std::vector<Rat> quot(num.degree() - dn + 1, Rat(0));
    Rat lead = den.coeffs().back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rat q = rem[k + dn] / lead;
        quot[k] = q;
        for (int i = 0; i <= dn; ++i) rem[k + i] -= q * den.coeff(i);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return BPoly::from_coeffs(std::move(quot));
}

void TruncatedSeries::add(const std::vector<int>& e, const Coeff& c) {
    for (int x : e)
        if (x > cap) return;
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
    TruncatedSeries r(n, cap);
    std::vector<int> e(n);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                e[i] = ea[i] + eb[i];
                ok = e[i] <= cap;
            }
            if (ok) r.add(e, ca * cb);
        }
    return r;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
    TruncatedSeries r(n, cap);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        std::vector<int> e2 = e;
        --e2[var];
        r.add(e2, c * Coeff::scalar(Rat(e[var])));
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Coeff& s) const {
    TruncatedSeries r(n, cap);
    for (const auto& [e, c] : terms) r.add(e, c * s);
    return r;
}

TruncatedSeries TruncatedSeries::geometric(int nvars, int degree_cap, const std::vector<int>& u,
                                           int power) {
    TruncatedSeries r(nvars, degree_cap);
    int step = 0;
    for (int x : u) step = std::max(step, x);
    std::vector<int> e(nvars, 0);
    Rat coef(1);
    for (int k = 0; step * k <= degree_cap || k == 0; ++k) {
        if (k > 0) coef = coef * Rat(k + power - 1) / Rat(k);
        for (int i = 0; i < nvars; ++i) e[i] = k * u[i];
        r.add(e, Coeff::scalar(coef));
        if (step == 0) break;
    }
    return r;
}

namespace {

TruncatedSeries monomial(int n, int cap, const std::vector<int>& e, const Rat& v) {
    TruncatedSeries s(n, cap);
    s.add(e, Coeff::scalar(v));
    return s;
}

const Rat kMu(-1);  // the refined Weber curve of the lattice count

}  // namespace

TruncatedSeries weber_base_series(int two_g, int n, int truncation) {
    int T = truncation;
    if (two_g == 0 && n == 3) {
        // -d1 d2 d3 [ z1 z2 z3 (z1 + z2 + z3 + z1 z2 z3) / prod (1 - z_i^2) ]
        TruncatedSeries num(3, T);
        num.add({2, 1, 1}, Coeff::scalar(Rat(1)));
        num.add({1, 2, 1}, Coeff::scalar(Rat(1)));
        num.add({1, 1, 2}, Coeff::scalar(Rat(1)));
        num.add({2, 2, 2}, Coeff::scalar(Rat(1)));
        TruncatedSeries f = num.mul(TruncatedSeries::geometric(3, T, {2, 0, 0}, 1))
                                .mul(TruncatedSeries::geometric(3, T, {0, 2, 0}, 1))
                                .mul(TruncatedSeries::geometric(3, T, {0, 0, 2}, 1));
        return f.derivative(0).derivative(1).derivative(2).scaled(Coeff::scalar(Rat(-1)));
    }
    if (two_g == 1 && n == 2) {
        // -bfrak d1 d2 [ ((z1+z2)^2 (1-z1 z2)^2 - z1 z2 (1-z1^2)(1-z2^2))
        //                / ((1-z1^2)^2 (1-z2^2)^2 (1-z1 z2))
        //              + z1 z2 (mu z1 z2 + mu - 1) / (2 (1-z1^2)(1-z2^2)) ]
        TruncatedSeries a(2, T);
        {
            TruncatedSeries sum2(2, T);  // (z1+z2)^2
            sum2.add({2, 0}, Coeff::scalar(Rat(1)));
            sum2.add({1, 1}, Coeff::scalar(Rat(2)));
            sum2.add({0, 2}, Coeff::scalar(Rat(1)));
            TruncatedSeries onemz(2, T);  // (1 - z1 z2)^2
            onemz.add({0, 0}, Coeff::scalar(Rat(1)));
            onemz.add({1, 1}, Coeff::scalar(Rat(-2)));
            onemz.add({2, 2}, Coeff::scalar(Rat(1)));
            TruncatedSeries corr(2, T);  // z1 z2 (1 - z1^2)(1 - z2^2)
            corr.add({1, 1}, Coeff::scalar(Rat(1)));
            corr.add({3, 1}, Coeff::scalar(Rat(-1)));
            corr.add({1, 3}, Coeff::scalar(Rat(-1)));
            corr.add({3, 3}, Coeff::scalar(Rat(1)));
            TruncatedSeries num = sum2.mul(onemz);
            num.add({1, 1}, Coeff::scalar(Rat(-1)));
            num.add({3, 1}, Coeff::scalar(Rat(1)));
            num.add({1, 3}, Coeff::scalar(Rat(1)));
            num.add({3, 3}, Coeff::scalar(Rat(-1)));
            a = num.mul(TruncatedSeries::geometric(2, T, {2, 0}, 2))
                    .mul(TruncatedSeries::geometric(2, T, {0, 2}, 2))
                    .mul(TruncatedSeries::geometric(2, T, {1, 1}, 1));
        }
        {
            TruncatedSeries num(2, T);  // z1 z2 (mu z1 z2 + mu - 1) / 2
            num.add({2, 2}, Coeff::scalar(kMu / 2));
            num.add({1, 1}, Coeff::scalar((kMu - 1) / 2));
            a += num.mul(TruncatedSeries::geometric(2, T, {2, 0}, 1))
                     .mul(TruncatedSeries::geometric(2, T, {0, 2}, 1));
        }
        TruncatedSeries d = a.derivative(0).derivative(1);
        return d.scaled(Coeff::bfrak() * Coeff::scalar(Rat(-1)));
    }
    if (two_g == 2 && n == 1) {
        // -d1 [ (2 (3 z^2 - 1) + bfrak^2 (3 (mu^2-4mu+3) z^4 - 6 (mu^2-2mu-2) z^2
        //        + 3 mu^2 - 1)) / (24 (1-z^2)^3) ]
        Rat c4 = (kMu * kMu - 4 * kMu + 3) * 3;
        Rat c2 = (kMu * kMu - 2 * kMu - 2) * -6;
        Rat c0 = kMu * kMu * 3 - 1;
        TruncatedSeries num(1, T);
        num.add({2}, Coeff::scalar(rat(6, 24)));
        num.add({0}, Coeff::scalar(rat(-2, 24)));
        Coeff b2 = Coeff::bfrak() * Coeff::bfrak();
        TruncatedSeries numb(1, T);
        numb.add({4}, Coeff::scalar(c4 / 24));
        numb.add({2}, Coeff::scalar(c2 / 24));
        numb.add({0}, Coeff::scalar(c0 / 24));
        TruncatedSeries total = num;
        TruncatedSeries scaled_numb = numb.scaled(b2);
        for (const auto& [e, c] : scaled_numb.terms) total.add(e, c);
        TruncatedSeries f = total.mul(TruncatedSeries::geometric(1, T, {2}, 3));
        return f.derivative(0).scaled(Coeff::scalar(Rat(-1)));
    }
    throw PreconditionError("weber_base_series: not a base topology");
}

std::map<LVec, BPoly> extract_counts(const TruncatedSeries& s, int two_g, int n) {
    std::map<LVec, BPoly> out;
    BPoly one_plus_b = BPoly(1) + BPoly::b();
    for (const auto& [e, coeff] : s.terms) {
        LVec L(n);
        Rat prod(1);
        for (int i = 0; i < n; ++i) {
            L[i] = e[i] + 1;
            prod *= L[i];
        }
        // omega = (-1)^n 2 (1+b)^{-g} sum N(L) prod L_i z_i^{L_i - 1}
        Rat scale = (n % 2 == 0 ? Rat(1) : Rat(-1)) / (2 * prod);
        BRat value;
        if (two_g % 2 == 0) {
            if (!coeff.c.is_zero())
                throw CrossCheckError("series coefficient has the wrong bfrak parity");
            BPoly pw(1);
            for (int j = 0; j < two_g / 2; ++j) pw *= one_plus_b;
            value = coeff.a * BRat::of(pw);
        } else {
            if (!coeff.a.is_zero())
                throw CrossCheckError("series coefficient has the wrong bfrak parity");
            // bfrak (1+b)^{1/2} = -b; the half powers of (1+b) must cancel
            BPoly pw = BPoly::b() * rat(-1);
            for (int j = 0; j < (two_g - 1) / 2; ++j) pw *= one_plus_b;
            value = coeff.c * BRat::of(pw);
        }
        value.num *= scale;
        auto poly = bpoly_exact_div(value.num, value.den);
        if (!poly) throw CrossCheckError("residual half-integer power of (1+b)");
        if (!poly->is_zero()) out[L] = *poly;
    }
    return out;
}

}  // namespace mg

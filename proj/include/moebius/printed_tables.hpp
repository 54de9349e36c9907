#pragma once

// Reference piecewise polynomials for 2g-2+n <= 2 (one row per parity count k,
// the first k lengths odd), and the reference refined Euler characteristics
// for g < 3, n <= 4. The helper delta is the chamber-dependent linear form
// max(2L_i - sum L, 0).

#include "moebius/chambers.hpp"
#include "moebius/mpoly.hpp"

namespace mg::tables {

using mg::BPoly;
using mg::MPoly;
using mg::Rat;

inline MPoly mvar(int n, int i) { return MPoly::var(n, i); }
inline MPoly mconst(int n, const Rat& c) { return MPoly::constant(n, BPoly(c)); }
inline MPoly mconst(int n, const BPoly& c) { return MPoly::constant(n, c); }

inline MPoly sum_l(int n) {
    MPoly s(n);
    for (int i = 0; i < n; ++i) s += mvar(n, i);
    return s;
}
inline MPoly sum_l2(int n) {
    MPoly s(n);
    for (int i = 0; i < n; ++i) s += mvar(n, i) * mvar(n, i);
    return s;
}
inline MPoly prod_l(int n) {
    MPoly s = mconst(n, Rat(1));
    for (int i = 0; i < n; ++i) s *= mvar(n, i);
    return s;
}

// the linear form the piecewise max takes on the given chamber
inline MPoly delta_form(const mg::Arrangement& arr, int chamber) {
    int n = arr.n;
    const auto& w = arr.chambers[chamber].witness;
    long total = 0;
    for (long x : w) total += x;
    int dom = -1;
    long best = 0;
    for (int i = 0; i < n; ++i)
        if (2 * w[i] - total > best) {
            best = 2 * w[i] - total;
            dom = i;
        }
    if (dom < 0) return MPoly(n);
    return mvar(n, dom) * mconst(n, Rat(2)) - sum_l(n);
}

// N^{[k]} for the type (2g, n); k = number of odd boundary lengths, which sit
// in the first k slots
inline MPoly printed_nk(int two_g, int n, int k, const MPoly& delta) {
    const BPoly b = BPoly::b(), b2 = BPoly::b(2);
    const BPoly one(1);
    if (two_g == 0 && n == 3) return mconst(3, Rat(1, 2));
    if (two_g == 1 && n == 2) {
        // max(L1, L2) = (sum + delta)/2 on either chamber
        MPoly mx = (sum_l(2) + delta) * mconst(2, Rat(1, 2));
        return (mx - mconst(2, Rat(1))) * mconst(2, b * Rat(1, 4));
    }
    if (two_g == 2 && n == 1) {
        MPoly l = mvar(1, 0);
        MPoly p = (l * l - mconst(1, Rat(4))) * mconst(1, one + b) +
                  (l * l * mconst(1, Rat(5)) - l * mconst(1, Rat(12)) + mconst(1, Rat(4))) *
                      mconst(1, b2);
        return p * mconst(1, Rat(1, 96));
    }
    if (two_g == 0 && n == 4) {
        Rat shift = (k == 2) ? Rat(2) : Rat(4);
        return (sum_l2(4) - mconst(4, shift)) * mconst(4, Rat(1, 8));
    }
    if (two_g == 1 && n == 3) {
        MPoly sl = sum_l(3), sl2 = sum_l2(3), pl = prod_l(3);
        MPoly core = delta.pow(3) - delta * mconst(3, Rat(4)) +
                     (sl - mconst(3, Rat(2))) * (sl2 - mconst(3, Rat(4))) * mconst(3, Rat(3)) -
                     pl * mconst(3, Rat(6));
        if (k == 2)
            core += (mvar(3, 0) + mvar(3, 1) - mconst(3, Rat(2))) * mconst(3, Rat(6));
        return core * mconst(3, b * Rat(1, 96));
    }
    if (two_g == 2 && n == 2) {
        MPoly sl = sum_l(2), sl2 = sum_l2(2), pl = prod_l(2);
        MPoly slm2 = sl - mconst(2, Rat(2));
        MPoly bracket = delta.pow(4) + delta.pow(3) * slm2 * mconst(2, Rat(4)) -
                        delta * slm2 * mconst(2, Rat(16)) +
                        (sl - mconst(2, Rat(4))) * slm2 *
                            (sl2 * mconst(2, Rat(3)) + pl * mconst(2, Rat(6)) +
                             sl * mconst(2, Rat(6)) - mconst(2, Rat(8)));
        if (k == 0) {
            bracket += delta.pow(2) *
                       (sl2 + pl * mconst(2, Rat(2)) - sl * mconst(2, Rat(6)) + mconst(2, Rat(6))) *
                       mconst(2, Rat(2));
            return bracket * mconst(2, b2 * Rat(1, 1536)) +
                   (sl2 - mconst(2, Rat(8))) * (sl2 - mconst(2, Rat(4))) *
                       mconst(2, (one + b) * Rat(1, 768));
        }
        bracket += delta.pow(2) *
                       (sl2 + pl * mconst(2, Rat(2)) - sl * mconst(2, Rat(6))) *
                       mconst(2, Rat(2)) +
                   slm2 * slm2 * mconst(2, Rat(12));
        return bracket * mconst(2, b2 * Rat(1, 1536)) +
               (sl2 - mconst(2, Rat(10))) * (sl2 - mconst(2, Rat(2))) *
                   mconst(2, (one + b) * Rat(1, 768));
    }
    if (two_g == 3 && n == 1) {
        MPoly l = mvar(1, 0);
        MPoly f = (l * l - mconst(1, Rat(4))) * (l - mconst(1, Rat(4)));
        MPoly inner = (l * l * mconst(1, Rat(17)) + l * mconst(1, Rat(38)) - mconst(1, Rat(60))) *
                          mconst(1, one + b) +
                      (l * l - l) * mconst(1, b2 * Rat(30));
        return f * inner * mconst(1, b * Rat(1, 46080));
    }
    throw std::logic_error("no printed row for this type");
}

// chi_{g,n} for g < 3 and n <= 4 with 2g-2+n > 0. Each genus row scales by
// -(2g-2+n) from one n to the next.
inline BPoly reference_chi(int two_g, int n) {
    const BPoly b = BPoly::b(), b2 = BPoly::b(2), b3 = BPoly::b(3), b4 = BPoly::b(4);
    BPoly base;
    int base_n;
    switch (two_g) {
        case 0:
            base = BPoly(Rat(1, 2));
            base_n = 3;
            break;
        case 1:
            base = b * Rat(-1, 4);
            base_n = 2;
            break;
        case 2:
            base = (BPoly(-1) - b + b2) / Rat(24);
            base_n = 1;
            break;
        case 3:
            base = b * (BPoly(1) + b) / Rat(48);
            base_n = 0;
            break;
        case 4:
            base = (BPoly(3) + b * 6 - b2 - b3 * 4 - b4) / Rat(-1440);
            base_n = 0;
            break;
        case 5:
            base = b * (BPoly(1) + b) * (BPoly(3) + b * 3 + b2) / Rat(-1440);
            base_n = 0;
            break;
        default:
            throw std::logic_error("chi row not tabulated");
    }
    BPoly out = base;
    for (int m = base_n; m < n; ++m) out *= Rat(-(two_g - 2 + m));
    return out;
}

}  // namespace mg::tables

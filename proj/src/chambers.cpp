#include "moebius/chambers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "moebius/errors.hpp"

namespace mg {

std::vector<WallForm> wall_forms(int n) {
    std::vector<WallForm> out;
    std::vector<int> eps(n, 0);
    // all {-1,0,+1}^n patterns with both signs present, first nonzero = +1
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        bool pos = false, neg = false;
        int first = 0;
        for (int i = 0; i < n; ++i) {
            eps[i] = static_cast<int>(c % 3) - 1;
            c /= 3;
            if (eps[i] && !first) first = eps[i];
            pos = pos || eps[i] > 0;
            neg = neg || eps[i] < 0;
        }
        if (!pos || !neg || first != 1) continue;
        out.push_back(WallForm{eps});
    }
    std::sort(out.begin(), out.end(),
              [](const WallForm& a, const WallForm& b) { return a.eps < b.eps; });
    return out;
}

namespace {

long vec_gcd(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    return g == 0 ? 1 : g;
}

struct Discovery {
    std::map<std::vector<int>, Chamber> chambers;  // keyed by sign vector
    std::map<int, std::vector<std::vector<long>>> per_wall;
};

Discovery scan(int n, const std::vector<WallForm>& forms, long bound) {
    Discovery d;
    std::vector<long> x(n, 1);
    std::vector<int> signs(forms.size());
    // quality of a witness: min |f(x)| relative to the point's total
    auto better = [&](const std::vector<long>& cand, const std::vector<long>& best) {
        long cmin = 0, bmin = 0, csum = 0, bsum = 0;
        bool first = true;
        for (const auto& f : forms) {
            long cv = std::abs(f.eval_int(cand)), bv = std::abs(f.eval_int(best));
            if (first) {
                cmin = cv;
                bmin = bv;
                first = false;
            } else {
                cmin = std::min(cmin, cv);
                bmin = std::min(bmin, bv);
            }
        }
        for (long v : cand) csum += v;
        for (long v : best) bsum += v;
        return cmin * bsum > bmin * csum;  // larger min distance per unit size
    };
    while (true) {
        int zero_at = -1, zeros = 0;
        for (size_t i = 0; i < forms.size(); ++i) {
            long v = forms[i].eval_int(x);
            signs[i] = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (v == 0) {
                ++zeros;
                zero_at = static_cast<int>(i);
            }
        }
        if (zeros == 0) {
            std::vector<long> reduced = x;
            long g = vec_gcd(reduced);
            for (auto& v : reduced) v /= g;
            auto it = d.chambers.find(signs);
            if (it == d.chambers.end())
                d.chambers.emplace(signs, Chamber{signs, reduced});
            else if (better(reduced, it->second.witness))
                it->second.witness = reduced;
        } else if (zeros == 1) {
            auto& list = d.per_wall[zero_at];
            std::vector<long> reduced = x;
            long g = vec_gcd(reduced);
            for (auto& v : reduced) v /= g;
            if (list.size() < 4 && std::find(list.begin(), list.end(), reduced) == list.end())
                list.push_back(reduced);
        }
        int i = n - 1;
        while (i >= 0 && x[i] == bound) x[i--] = 1;
        if (i < 0) break;
        ++x[i];
    }
    return d;
}

std::mutex arr_mutex;
std::map<int, Arrangement> arr_cache;

}  // namespace

const Arrangement& arrangement(int n) {
    if (n < 1 || n > 4) throw PreconditionError("arrangement: n out of range");
    std::lock_guard<std::mutex> lk(arr_mutex);
    auto it = arr_cache.find(n);
    if (it != arr_cache.end()) return it->second;

    Arrangement arr;
    arr.n = n;
    arr.forms = wall_forms(n);
    long bound = n <= 2 ? 8 : (n == 3 ? 16 : 44);
    Discovery d = scan(n, arr.forms, bound);
    if (n <= 4) {
        // the chamber set must already be saturated on a coarser grid
        Discovery smaller = scan(n, arr.forms, bound * 3 / 4);
        if (smaller.chambers.size() != d.chambers.size())
            throw CrossCheckError("chamber discovery not stable under grid refinement");
    }
    for (auto& [signs, ch] : d.chambers) arr.chambers.push_back(ch);
    for (auto& [wall, pts] : d.per_wall)
        for (auto& p : pts) arr.wall_points.push_back({p, wall});
    auto [it2, ok] = arr_cache.emplace(n, std::move(arr));
    return it2->second;
}

int Arrangement::locate(const std::vector<Rat>& x) const {
    std::vector<int> signs(forms.size());
    for (size_t i = 0; i < forms.size(); ++i) {
        Rat v = forms[i].eval(x);
        signs[i] = v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    for (size_t c = 0; c < chambers.size(); ++c) {
        bool ok = true;
        for (size_t i = 0; i < forms.size() && ok; ++i)
            ok = signs[i] == 0 || signs[i] == chambers[c].signs[i];
        if (ok) return static_cast<int>(c);
    }
    throw CrossCheckError("no chamber matches the sample point");
}

int Arrangement::locate_int(const std::vector<long>& x) const {
    std::vector<Rat> xr(x.begin(), x.end());
    return locate(xr);
}

}  // namespace mg

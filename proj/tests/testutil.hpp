#pragma once

#include <vector>

#include "moebius/lattice.hpp"

namespace tu {

// all tuples in Z_{>0}^n with total at most cap, lexicographic order
inline std::vector<mg::LVec> tuples_with_sum_at_most(int n, long cap) {
    std::vector<mg::LVec> out;
    mg::LVec cur;
    auto rec = [&](auto&& self, long left) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        long slots = n - static_cast<long>(cur.size());
        for (long v = 1; v + (slots - 1) <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, cap);
    return out;
}

// nondecreasing tuples only (counts are symmetric, so these suffice)
inline std::vector<mg::LVec> sorted_tuples_with_sum_at_most(int n, long cap) {
    std::vector<mg::LVec> out;
    for (auto& t : tuples_with_sum_at_most(n, cap)) {
        bool sorted = true;
        for (size_t i = 1; i < t.size(); ++i) sorted = sorted && t[i - 1] <= t[i];
        if (sorted) out.push_back(t);
    }
    return out;
}

}  // namespace tu

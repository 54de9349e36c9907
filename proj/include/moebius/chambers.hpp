#pragma once

#include <vector>

#include "moebius/rational.hpp"

namespace mg {

// The wall arrangement of the refined count: hyperplanes sum_i eps_i L_i = 0
// with eps in {+1,-1,0}, intersected with the open positive orthant. Only
// forms with mixed signs can vanish there; they are normalized so the first
// nonzero coefficient is +1.
struct WallForm {
    std::vector<int> eps;
    long eval_int(const std::vector<long>& x) const {
        long s = 0;
        for (size_t i = 0; i < eps.size(); ++i) s += eps[i] * x[i];
        return s;
    }
    Rat eval(const std::vector<Rat>& x) const {
        Rat s(0);
        for (size_t i = 0; i < eps.size(); ++i) s += Rat(eps[i]) * x[i];
        return s;
    }
};

std::vector<WallForm> wall_forms(int n);

struct Chamber {
    std::vector<int> signs;     // +1/-1 per wall form, strict in the interior
    std::vector<long> witness;  // gcd-reduced integer interior point
};

struct Arrangement {
    int n = 0;
    std::vector<WallForm> forms;
    std::vector<Chamber> chambers;
    // sample points lying on exactly one wall, with the wall index
    std::vector<std::pair<std::vector<long>, int>> wall_points;

    // chamber whose sign vector is compatible with x (walls x sits on act as
    // wildcards); throws if nothing matches
    int locate(const std::vector<Rat>& x) const;
    int locate_int(const std::vector<long>& x) const;
};

// cached per n; chambers are discovered on an integer grid large enough for
// these arrangements (n <= 5), and the discovery is re-run on a coarser grid
// to confirm stability
const Arrangement& arrangement(int n);

}  // namespace mg

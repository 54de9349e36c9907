#pragma once

#include <vector>

#include "moebius/chambers.hpp"
#include "moebius/mpoly.hpp"
#include "moebius/recursion.hpp"

namespace mg {

// The piecewise quasipolynomial shape of N_{g,n}: one polynomial per parity
// class and chamber, of total degree 6g-6+2n, reconstructed by exact
// interpolation on parity-preserving grids deep inside each chamber.
struct QuasiPoly {
    int two_g = 0, n = 0, degree = 0;
    // indexed [parity mask][chamber]; bit i of the mask = parity of L_{i+1}
    std::vector<std::vector<MPoly>> polys;
};

struct ReconstructOptions {
    int budget = 2;  // largest 2g-2+n reconstructed without force
    bool force = false;
    uint64_t seed = 20260809;
    int verify_samples = -1;  // default: degree + 2
};

QuasiPoly reconstruct(int two_g, int n, CountTable* table,
                      const ReconstructOptions& opts = {});

// process-wide memo of reconstructions (values do not depend on the table)
const QuasiPoly& reconstruct_cached(int two_g, int n, CountTable* table,
                                    const ReconstructOptions& opts = {});

// evaluate at a rational point within the closure of some chamber, for the
// given parity class (entries 0/1)
BPoly qp_evaluate(const QuasiPoly& qp, const std::vector<Rat>& L, const std::vector<int>& parity);
// integer points carry their own parity
BPoly qp_evaluate_int(const QuasiPoly& qp, const LVec& L);

// homogeneous top-degree part, per chamber; asserts that every even parity
// class yields the same leading polynomial and that it is nonzero
std::vector<MPoly> leading_part(const QuasiPoly& qp);

}  // namespace mg

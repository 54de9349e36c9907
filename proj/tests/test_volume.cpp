#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/volume.hpp"
#include "table_fixtures.hpp"

using namespace mg;

namespace {
const BPoly kB = BPoly::b();
const BPoly kB2 = BPoly::b(2);

std::vector<Rat> rvec(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.push_back(Rat(x));
    return out;
}
}  // namespace

TEST_CASE("base volumes") {
    CHECK(volume_base(0, 3, rvec({7, 1, 3})) == BPoly(rat(1, 2)));
    CHECK(volume_base(1, 2, rvec({3, 5})) == kB * rat(5, 4));
    CHECK(volume_base(2, 1, rvec({1})) == (BPoly(1) + kB + kB2 * 5) / Rat(96));
    CHECK_THROWS_AS(volume_base(0, 4, rvec({1, 1, 1, 1})), PreconditionError);
}

TEST_CASE("volumes from leading parts match the base closed forms") {
    CountTable t;
    VolumePoly v11 = volume_from_counts(2, 1, &t);
    CHECK(volume_eval(v11, rvec({5})) == volume_base(2, 1, rvec({5})));
    VolumePoly v12 = volume_from_counts(1, 2, &t);
    CHECK(volume_eval(v12, rvec({3, 5})) == kB * rat(5, 4));
    CHECK(volume_eval(v12, rvec({6, 2})) == kB * rat(6, 4));
    VolumePoly v04 = volume_from_counts(0, 4, &t);
    CHECK(volume_eval(v04, rvec({1, 2, 3, 4})) == BPoly(rat(30, 4)));  // sum L^2 / 4
}

TEST_CASE("piecewise polynomial integration is exact") {
    // integral of p(6 - p) over [0, 6] split at 2: 36 - 72 + ... = 36
    PiecewisePoly1 pp;
    pp.breakpoints = {Rat(0), Rat(2), Rat(6)};
    Poly1 seg;
    seg.c = {BPoly(), BPoly(6), BPoly(rat(-1))};
    pp.segments = {seg, seg};
    CHECK(pp.integrate() == BPoly(36));
}

TEST_CASE("volume recursion worked example at (0,4)") {
    CountTable t;
    // RHS = sum L_i^2 / 4 at a generic point
    std::vector<Rat> L = rvec({10, 1, 2, 3});
    CHECK(volume_rhs(0, 4, L, &t) == BPoly(rat(114, 4)));
    CHECK(volume_rhs(0, 4, rvec({2, 9, 4, 7}), &t) == BPoly(rat(4 + 81 + 16 + 49) / 4));
    CHECK_THROWS_AS(volume_rhs(1, 2, rvec({2, 3}), &t), PreconditionError);
}

TEST_CASE("volume recursion agrees with extracted volumes at chi = 2") {
    CountTable t;
    // one deterministic interior point per type; the acceptance suite sweeps more
    struct Case {
        int two_g, n;
        std::vector<Rat> L;
    };
    std::vector<Case> chi2 = {
        {0, 4, rvec({10, 1, 2, 3})},
        {1, 3, rvec({8, 3, 1})},
        {2, 2, rvec({7, 2})},
        {3, 1, rvec({5})},
    };
    for (auto& [two_g, n, L] : chi2) {
        VolumePoly v = volume_from_counts(two_g, n, &t);
        CHECK(volume_rhs(two_g, n, L, &t) == volume_eval(v, L));
    }
}

TEST_CASE("volume homogeneity and b = 0 slice") {
    CountTable t;
    VolumePoly v13 = volume_from_counts(1, 3, &t);
    std::vector<Rat> L = rvec({5, 3, 1});
    std::vector<Rat> L2 = {L[0] * rat(3, 2), L[1] * rat(3, 2), L[2] * rat(3, 2)};
    int deg = 3 * 1 - 6 + 2 * 3;
    CHECK(volume_eval(v13, L2) == volume_eval(v13, L) * rat_pow(rat(3, 2), deg));

    VolumePoly v11 = volume_from_counts(2, 1, &t);
    CHECK(volume_eval(v11, rvec({4})).eval(rat(0)) == rat(16, 96));
    VolumePoly v04 = volume_from_counts(0, 4, &t);
    CHECK(volume_eval(v04, rvec({2, 2, 2, 2})).eval(rat(0)) == rat(4));
}

TEST_CASE("Laplace identification holds at the base topologies") {
    CHECK(airy_laplace_check(0, 3));
    CHECK(airy_laplace_check(1, 2));
    CHECK(airy_laplace_check(2, 1));
    CHECK_THROWS_AS(airy_laplace_check(0, 4), PreconditionError);
}

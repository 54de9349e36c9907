#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/quasipoly.hpp"
#include "table_fixtures.hpp"

using namespace mg;

namespace {
const BPoly kB = BPoly::b();
const BPoly kB2 = BPoly::b(2);

int mask_first_k_odd(int k) { return (1 << k) - 1; }
}  // namespace

TEST_CASE("mpoly arithmetic basics") {
    MPoly x = MPoly::var(2, 0), y = MPoly::var(2, 1);
    MPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.total_degree() == 2);
    CHECK(p.eval({rat(3), rat(2)}) == BPoly(5));
    CHECK(p.homogeneous_part(2) == p);
    CHECK(p.homogeneous_part(1).is_zero());
    MPoly q = x * y.pow(2);
    CHECK(q.permuted({1, 0}) == y * x.pow(2));
}

TEST_CASE("reconstruct matches the printed (1,1) and (1/2,2) rows") {
    CountTable t;
    QuasiPoly q11 = reconstruct(2, 1, &t);
    const Arrangement& a1 = arrangement(1);
    CHECK(q11.polys[0][0] == tf::printed_nk(2, 1, 0, tf::delta_form(a1, 0)));
    CHECK(q11.polys[1][0].is_zero());

    QuasiPoly q12 = reconstruct(1, 2, &t);
    const Arrangement& a2 = arrangement(2);
    for (int c = 0; c < 2; ++c) {
        MPoly want = tf::printed_nk(1, 2, 0, tf::delta_form(a2, c));
        CHECK(q12.polys[0][c] == want);
        CHECK(q12.polys[3][c] == want);  // k = 2 has the same row
        CHECK(q12.polys[1][c].is_zero());
        CHECK(q12.polys[2][c].is_zero());
    }
}

TEST_CASE("reconstruct matches the printed (1/2,3) rows on every chamber") {
    CountTable t;
    QuasiPoly qp = reconstruct(1, 3, &t);
    const Arrangement& arr = arrangement(3);
    for (size_t c = 0; c < arr.chambers.size(); ++c) {
        MPoly delta = tf::delta_form(arr, static_cast<int>(c));
        CHECK(qp.polys[0][c] == tf::printed_nk(1, 3, 0, delta));
        CHECK(qp.polys[mask_first_k_odd(2)][c] == tf::printed_nk(1, 3, 2, delta));
        CHECK(qp.polys[7][c].is_zero());  // odd k
        CHECK(qp.polys[1][c].is_zero());
    }
}

TEST_CASE("reconstruct matches the printed (1,2) and (3/2,1) rows") {
    CountTable t;
    QuasiPoly q22 = reconstruct(2, 2, &t);
    const Arrangement& a2 = arrangement(2);
    for (int c = 0; c < 2; ++c) {
        MPoly delta = tf::delta_form(a2, c);
        CHECK(q22.polys[0][c] == tf::printed_nk(2, 2, 0, delta));
        CHECK(q22.polys[3][c] == tf::printed_nk(2, 2, 2, delta));
    }
    QuasiPoly q31 = reconstruct(3, 1, &t);
    CHECK(q31.polys[0][0] == tf::printed_nk(3, 1, 0, tf::delta_form(arrangement(1), 0)));
}

TEST_CASE("evaluate: lattice consistency, constant term, wall continuity") {
    CountTable t;
    QuasiPoly qp = reconstruct(2, 1, &t);
    CHECK(qp_evaluate_int(qp, {6}) == count_recursive(2, 1, {6}, &t));
    // the printed chi_{1,1} value as the constant term
    CHECK(qp_evaluate(qp, {rat(0)}, {0}) ==
          (BPoly(-1) - kB + kB2) / Rat(24));

    QuasiPoly q04 = reconstruct(0, 4, &t);
    CHECK(qp_evaluate_int(q04, {2, 4, 2, 2}) == count_recursive(0, 4, {2, 4, 2, 2}, &t));
    CHECK(qp_evaluate_int(q04, {1, 3, 2, 2}) == count_recursive(0, 4, {1, 3, 2, 2}, &t));
    // continuity across a wall, evaluated from both sides
    const Arrangement& arr = arrangement(4);
    REQUIRE(!arr.wall_points.empty());
    int checked = 0;
    for (const auto& [pt, wall] : arr.wall_points) {
        if (checked >= 8) break;
        std::vector<Rat> x(pt.begin(), pt.end());
        std::vector<Rat> up = x, down = x;
        for (int i = 0; i < 4; ++i) {
            up[i] += Rat(arr.forms[wall].eps[i]) / 1000;
            down[i] -= Rat(arr.forms[wall].eps[i]) / 1000;
        }
        int cu = arr.locate(up), cd = arr.locate(down);
        if (cu == cd) continue;
        for (int mask : {0, 3}) {
            CHECK(q04.polys[mask][cu].eval(x) == q04.polys[mask][cd].eval(x));
        }
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("leading parts: equal across parities, homogeneous, correct values") {
    CountTable t;
    QuasiPoly q04 = reconstruct(0, 4, &t);
    auto lead = leading_part(q04);
    MPoly want = tf::sum_l2(4) * tf::mconst(4, rat(1, 8));
    for (const auto& m : lead) CHECK(m == want);

    QuasiPoly q12 = reconstruct(1, 2, &t);
    auto lead12 = leading_part(q12);
    const Arrangement& a2 = arrangement(2);
    for (int c = 0; c < 2; ++c) {
        // b max(L1, L2)/4 restricted to the chamber
        int dom = a2.chambers[c].witness[0] > a2.chambers[c].witness[1] ? 0 : 1;
        CHECK(lead12[c] == MPoly::var(2, dom) * MPoly::constant(2, kB * Rat(1, 4)));
    }

    QuasiPoly q11 = reconstruct(2, 1, &t);
    auto lead11 = leading_part(q11);
    CHECK(lead11[0] ==
          MPoly::var(1, 0).pow(2) * MPoly::constant(1, (BPoly(1) + kB + kB2 * 5) / Rat(96)));
}

TEST_CASE("budget is enforced") {
    CountTable t;
    CHECK_THROWS_AS(reconstruct(2, 3, &t), BudgetError);
    ReconstructOptions forced;
    forced.force = true;
    forced.budget = 0;
    CHECK_THROWS_AS(reconstruct(0, 2, &t, forced), PreconditionError);
}

#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/recursion.hpp"
#include "moebius/weber.hpp"
#include "testutil.hpp"

using namespace mg;

TEST_CASE("exact polynomial division") {
    BPoly p = (BPoly(1) + BPoly::b()) * (BPoly(2) + BPoly::b(2));
    auto q = bpoly_exact_div(p, BPoly(1) + BPoly::b());
    REQUIRE(q.has_value());
    CHECK(*q == BPoly(2) + BPoly::b(2));
    CHECK_FALSE(bpoly_exact_div(BPoly(1) + BPoly::b(), BPoly::b()).has_value());
}

TEST_CASE("coefficient ring reduction rule") {
    Coeff bf = Coeff::bfrak();
    Coeff sq = bf * bf;
    CHECK(sq.c.is_zero());
    CHECK(sq.a.equals(BRat{BPoly::b(2), BPoly(1) + BPoly::b()}));
}

TEST_CASE("series arithmetic respects truncation") {
    TruncatedSeries g = TruncatedSeries::geometric(1, 9, {2}, 1);
    CHECK(g.find({0})->a.equals(BRat::of(BPoly(1))));
    CHECK(g.find({8})->a.equals(BRat::of(BPoly(1))));
    CHECK(g.find({3}) == nullptr);
    TruncatedSeries sq = g.mul(g);  // (1-z^2)^{-2} = sum (k+1) z^{2k}
    CHECK(sq.find({6})->a.equals(BRat::of(BPoly(4))));
    TruncatedSeries d = sq.derivative(0);
    CHECK(d.find({5})->a.equals(BRat::of(BPoly(24))));
}

TEST_CASE("pair of pants extraction") {
    TruncatedSeries s = weber_base_series(0, 3, 9);
    auto counts = extract_counts(s, 0, 3);
    CHECK(counts.at({1, 1, 2}) == BPoly(rat(1, 2)));
    CHECK(counts.find(LVec{1, 1, 1}) == counts.end());
    CHECK(counts.at({2, 2, 2}) == BPoly(rat(1, 2)));
    CHECK(counts.at({4, 3, 1}) == BPoly(rat(1, 2)));
}

TEST_CASE("cross-cap extraction") {
    TruncatedSeries s = weber_base_series(1, 2, 9);
    auto counts = extract_counts(s, 1, 2);
    CHECK(counts.at({2, 2}) == BPoly::b() / Rat(4));
    CHECK(counts.find(LVec{1, 1}) == counts.end());  // max - 1 vanishes
    CHECK(counts.at({3, 1}) == BPoly::b() / Rat(2));
    CHECK(counts.at({4, 4}) == BPoly::b() * rat(3, 4));
}

TEST_CASE("one-holed torus and Klein bottle extraction") {
    TruncatedSeries s = weber_base_series(2, 1, 9);
    auto counts = extract_counts(s, 2, 1);
    CHECK(counts.at({4}) == (BPoly(1) + BPoly::b() + BPoly(3) * BPoly::b(2)) / Rat(8));
    CHECK(counts.find(LVec{3}) == counts.end());
    CHECK(counts.find(LVec{2}) == counts.end());  // base case vanishes at 2
}

TEST_CASE("extraction agrees with the base cases through sum L <= 16") {
    struct Case {
        int two_g, n;
    };
    for (auto [two_g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {2, 1}}) {
        TruncatedSeries s = weber_base_series(two_g, n, 17);
        auto counts = extract_counts(s, two_g, n);
        for (const LVec& L : tu::tuples_with_sum_at_most(n, 16)) {
            BPoly want = base_case(two_g, n, L);
            auto it = counts.find(L);
            BPoly got = it == counts.end() ? BPoly() : it->second;
            CHECK(got == want);
        }
    }
}

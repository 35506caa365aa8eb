#include <doctest.h>

#include "omegacalc/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace omegacalc;

namespace {

// Independent oracle: count partitions of s into at most parts_left parts,
// each at most maxpart, by direct enumeration of the largest part.
long brute_box(int s, int parts_left, int maxpart) {
    if (s == 0) return 1;
    if (parts_left == 0 || maxpart == 0) return 0;
    long total = 0;
    for (int k = std::min(maxpart, s); k >= 1; --k)
        total += brute_box(s - k, parts_left - 1, k);
    return total;
}

SL2Character chi(std::vector<int> weights) {
    SL2Character out;
    for (int m : weights) out.add(m, Integer(1));
    return out;
}

} // namespace

TEST_SUITE("characters") {

TEST_CASE("character arithmetic and printing") {
    SL2Character a = chi({8, 4, 0});
    CHECK(a.dim() == 9 + 5 + 1);
    CHECK(a.mult(4) == 1);
    CHECK(a.mult(2) == 0);
    CHECK(a.str() == "S8 + S4 + S0");

    SL2Character b;
    b.add(4, Integer(2));
    b.add(1, Integer(-3));
    CHECK(b.str() == "2*S4 - 3*S1");
    CHECK_FALSE(b.nonnegative());
    CHECK(b.dim() == 2 * 5 - 3 * 2);

    SL2Character diff = a - a;
    CHECK(diff.is_zero());
    CHECK(diff.str() == "0");
    CHECK((a + b).mult(4) == 3);
    CHECK((a - b).mult(1) == 3);

    SL2Character cancel;
    cancel.add(4, Integer(1));
    cancel.add(4, Integer(-1));
    CHECK(cancel.is_zero());
    CHECK(cancel == SL2Character{});

    CHECK_THROWS_AS(cancel.add(-2, Integer(1)), std::invalid_argument);
}

TEST_CASE("box partition counts match direct enumeration") {
    for (int r = 0; r <= 5; ++r)
        for (int d = 0; d <= 5; ++d) {
            auto counts = box_partitions(r, d);
            REQUIRE(static_cast<int>(counts.size()) == r * d + 1);
            for (int s = 0; s <= r * d; ++s) {
                CAPTURE(r);
                CAPTURE(d);
                CAPTURE(s);
                CHECK(counts[static_cast<size_t>(s)] == brute_box(s, r, d));
            }
        }

    // complementation symmetry inside the box, and the corners
    auto big = box_partitions(7, 9);
    CHECK(big.front() == 1);
    CHECK(big.back() == 1);
    for (int s = 0; s <= 63; ++s)
        CHECK(big[static_cast<size_t>(s)] == big[static_cast<size_t>(63 - s)]);

    CHECK_THROWS_AS(box_partitions(-1, 3), std::invalid_argument);
}

TEST_CASE("plethysm values and dimension bookkeeping") {
    CHECK(plethysm(2, 4) == chi({8, 4, 0}));
    CHECK(plethysm(2, 2) == chi({4, 0}));
    CHECK(plethysm(2, 3) == chi({6, 2}));
    CHECK(plethysm(3, 3) == chi({9, 5, 3}));
    CHECK(plethysm(0, 5) == chi({0}));
    for (int d = 0; d <= 8; ++d) CHECK(plethysm(1, d) == chi({d}));

    for (int r = 0; r <= 8; ++r)
        for (int d = 0; d <= 8; ++d) {
            auto ch = plethysm(r, d);
            CAPTURE(r);
            CAPTURE(d);
            CHECK(ch.nonnegative());
            CHECK(ch.dim() == binomial(d + r, r));
        }

    CHECK_THROWS_AS(plethysm(-1, 2), std::invalid_argument);
}

TEST_CASE("plethysm is symmetric in the box (Hermite reciprocity)") {
    for (int r = 0; r <= 8; ++r)
        for (int d = r; d <= 8; ++d) {
            CAPTURE(r);
            CAPTURE(d);
            CHECK(plethysm(r, d) == plethysm(d, r));
        }
}

TEST_CASE("graded exponent sets") {
    CHECK((a_set(2, 2) == std::vector<int>{0, 2, 3, 4}));
    CHECK((a_set(1, 1) == std::vector<int>{0}));
    CHECK((a_set(1, 2) == std::vector<int>{0, 2}));
    for (int e = 1; e <= 4; ++e)
        for (int r = 1; r <= 5; ++r)
            CHECK(static_cast<int>(a_set(e, r).size()) == r * e);
}

TEST_CASE("section character assembly and its dimension identity") {
    CHECK(ox_character(5, 2, 2) == chi({10, 6, 4, 2}));

    // r = 1 follows the same exponent-set formula
    CHECK(ox_character(5, 2, 1) == chi({5, 1}));
    CHECK(ox_character(7, 3, 1) == chi({7, 3, 1}));

    for (int d = 3; d <= 8; ++d)
        for (int e = 1; 2 * e < d; ++e)
            for (int r = 1; r <= 5; ++r) {
                auto ch = ox_character(d, e, r);
                CAPTURE(d);
                CAPTURE(e);
                CAPTURE(r);
                // every summand appears exactly once
                for (const auto& [m, c] : ch.mults) CHECK(c == 1);
                Integer kernel_dim =
                    Integer(r * (d - e) + 1) * Integer(r * e + 1) - Integer(r * d - 1);
                CHECK(ch.dim() == kernel_dim);
            }

    CHECK_THROWS_AS(ox_character(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(ox_character(5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ox_character(5, 2, 0), std::invalid_argument);
}

TEST_CASE("quadratic piece of the ideal") {
    CHECK(ideal_character(5, 2, 2).is_zero());
    CHECK(ideal_character(5, 1, 2) == chi({2}));
    CHECK(ideal_character(6, 2, 2) == chi({0}));

    for (int d = 3; d <= 9; ++d)
        for (int e = 1; 2 * e < d; ++e) {
            CAPTURE(d);
            CAPTURE(e);
            // independent route: remove the even-exponent section summands
            // from S_2(S_d), whose exponents are exactly the even p <= d
            SL2Character expected = plethysm(2, d);
            for (int p = 0; p <= 2 * e; p += 2) expected -= chi({2 * d - 2 * p});
            auto ch = ideal_character(d, e, 2);
            CHECK(ch == expected);
            CHECK(ch.nonnegative());
            // empty exactly in the boundary case d odd, e = (d-1)/2
            CHECK(ch.is_zero() == (d % 2 == 1 && 2 * e == d - 1));
        }
}

TEST_CASE("higher graded pieces of the ideal") {
    // the repeated-root locus of binary cubics is the quartic discriminant
    // hypersurface, so its ideal starts with a single invariant in degree 4
    CHECK(ideal_character(3, 1, 2).is_zero());
    CHECK(ideal_character(3, 1, 3).is_zero());
    CHECK(ideal_character(3, 1, 4) == chi({0}));

    for (int d = 3; d <= 8; ++d)
        for (int e = 1; 2 * e < d; ++e)
            for (int r = 3; r <= 4; ++r) {
                CAPTURE(d);
                CAPTURE(e);
                CAPTURE(r);
                auto ideal = ideal_character(d, e, r);
                CHECK(ideal.nonnegative());
                CHECK(ideal.dim() + ox_character(d, e, r).dim() == plethysm(r, d).dim());
            }

    CHECK_THROWS_AS(ideal_character(5, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ideal_character(4, 2, 3), std::invalid_argument);
}

TEST_CASE("regularity bound") {
    CHECK(regularity_m0(2, 5, 2) == 4);
    CHECK(regularity_m0(3, 7, 1) == 5);
    CHECK(regularity_m0(2, 8, 3) == 5);
    for (int d = 3; d <= 12; ++d)
        for (int e = 1; 2 * e < d; ++e) CHECK(regularity_m0(1, d, e) == 4);

    // max{4, 12 - 9/100, 21 - 10} = 11.91 -> 12
    CHECK(regularity_m0(10, 100, 1) == 12);
    // the max can land exactly on an integer; the ceiling must not round up
    CHECK(regularity_m0(4, 9, 2) == 7);

    CHECK_THROWS_AS(regularity_m0(0, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(regularity_m0(2, 4, 2), std::invalid_argument);
}

} // TEST_SUITE

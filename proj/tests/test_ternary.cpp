#include <doctest.h>

#include "omegacalc/operators.hpp"
#include "omegacalc/ternary.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

using namespace omegacalc;

namespace {

const std::vector<VarSet> XV{{"x", 3}};

MultiPoly random_ternary_linear(std::mt19937& rng) {
    std::uniform_int_distribution<int> cd(-4, 4);
    MultiPoly l(XV);
    while (l.is_zero())
        for (int i = 0; i < 3; ++i) l += Rational(cd(rng)) * MultiPoly::variable(XV, "x", i);
    return l;
}

TernaryForm random_split_quintic(std::mt19937& rng) {
    MultiPoly l1 = random_ternary_linear(rng);
    MultiPoly l2 = random_ternary_linear(rng);
    return TernaryForm::from_poly(l1.pow(3) * l2.pow(2), "x");
}

// one-cell-per-column bracket monomial l_x^d, the identity concomitant
BracketMonomial plain_letter(int d) {
    BracketMonomial m;
    m.linear_factors.assign(static_cast<size_t>(d), "alpha");
    return m;
}

using Mat3 = std::array<std::array<int, 3>, 3>;

int det3i(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// random product of integer shears, so the determinant is exactly 1
Mat3 random_unimodular(std::mt19937& rng) {
    Mat3 n{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::uniform_int_distribution<int> idx(0, 2), cd(-2, 2);
    for (int step = 0; step < 4; ++step) {
        int i = idx(rng), j = idx(rng), c = cd(rng);
        if (i == j) continue;
        for (int k = 0; k < 3; ++k) n[static_cast<size_t>(i)][static_cast<size_t>(k)] +=
            c * n[static_cast<size_t>(j)][static_cast<size_t>(k)];
    }
    return n;
}

Mat3 cofactor(const Mat3& m) {
    auto minor = [&m](int r, int c) {
        std::array<int, 4> e;
        int t = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != r && j != c) e[static_cast<size_t>(t++)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return e[0] * e[3] - e[1] * e[2];
    };
    Mat3 cof;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            cof[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                ((i + j) % 2 == 0 ? 1 : -1) * minor(i, j);
    return cof;
}

std::vector<MultiPoly> matrix_columns_on(const Mat3& m, const std::string& name) {
    const std::vector<VarSet> vars{{name, 3}};
    std::vector<MultiPoly> vals;
    for (int i = 0; i < 3; ++i) {
        MultiPoly v(vars);
        for (int j = 0; j < 3; ++j)
            v += Rational(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                 MultiPoly::variable(vars, name, j);
        vals.push_back(v);
    }
    return vals;
}

} // namespace

TEST_SUITE("ternary") {

TEST_CASE("ternary form container") {
    TernaryForm f(5);
    f.add_term({3, 2, 0}, Rational(2));
    f.add_term({0, 0, 5}, Rational(-1));
    f.add_term({3, 2, 0}, Rational(-2)); // cancels
    CHECK(f.coeff({3, 2, 0}).is_zero());
    CHECK(f.coeff({0, 0, 5}) == Rational(-1));
    CHECK_THROWS_AS(f.add_term({1, 1, 1}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(f.add_term({6, -1, 0}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(TernaryForm(-2), std::invalid_argument);

    TernaryForm g = TernaryForm::monomial({2, 1, 1}, Rational(3));
    CHECK(g.degree == 4);
    CHECK(TernaryForm::from_poly(g.to_poly("x"), "x") == g);

    MultiPoly inhom(XV);
    inhom.add_term({1, 0, 0}, Rational(1));
    inhom.add_term({2, 0, 0}, Rational(1));
    CHECK_THROWS_AS(TernaryForm::from_poly(inhom, "x"), std::invalid_argument);
}

TEST_CASE("tableau parsing") {
    TableauSpec s1 = parse_tableau_spec("5,3,4,4|0,2,1,1");
    REQUIRE(s1.rows.size() == 2);
    CHECK((s1.rows[0] == std::vector<int>{5, 3, 4, 4}));
    CHECK((s1.rows[1] == std::vector<int>{0, 2, 1, 1}));

    BracketMonomial psi1 = parse_tableau(s1);
    BracketMonomial expected1;
    expected1.u_factors = {{"alpha", "beta"}, {"alpha", "beta"}, {"alpha", "gamma"},
                           {"alpha", "delta"}};
    expected1.linear_factors = {"alpha", "beta", "beta", "beta", "gamma", "gamma",
                                "gamma", "gamma", "delta", "delta", "delta", "delta"};
    CHECK(psi1 == expected1);
    CHECK(psi1.order() == 12);
    CHECK(psi1.cls() == 4);
    CHECK(psi1.str() ==
          "(alpha beta u)^2 (alpha gamma u) (alpha delta u) alpha_x beta_x^3 gamma_x^4 delta_x^4");

    BracketMonomial pair = parse_tableau(parse_tableau_spec("5,1|0,4"));
    BracketMonomial expected2;
    expected2.u_factors = {{"alpha", "beta"}, {"alpha", "beta"}, {"alpha", "beta"},
                           {"alpha", "beta"}};
    expected2.linear_factors = {"alpha", "beta"};
    CHECK(pair == expected2);

    BracketMonomial triple = parse_tableau(parse_tableau_spec("5,3,3|0,2,0|0,0,2"));
    BracketMonomial expected3;
    expected3.det_factors = {{"alpha", "beta", "gamma"}, {"alpha", "beta", "gamma"}};
    expected3.linear_factors = {"alpha", "alpha", "alpha", "beta", "beta", "beta",
                                "gamma", "gamma", "gamma"};
    CHECK(triple == expected3);

    // a letter short of the full degree is completed with linear factors
    BracketMonomial completed = parse_tableau(parse_tableau_spec("5,4,0,0|0,1,5,0"));
    CHECK(completed.order() == 8);
    CHECK(completed.cls() == 6);
    CHECK(completed.letter_degrees().at("delta") == 5);

    CHECK_THROWS_AS(parse_tableau(parse_tableau_spec("0,5|5,0")), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau(parse_tableau_spec("6,0|0,0")), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau(parse_tableau_spec("1,0|2,0")), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau(parse_tableau_spec("5,5")), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau(parse_tableau_spec("5,1|0,4|0,0|0,0")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau_spec("5,x|0,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau_spec(""), std::invalid_argument);
}

TEST_CASE("evaluation basics") {
    std::mt19937 rng(61u);
    TernaryForm f = random_split_quintic(rng);

    // the d linear factors of a single letter reproduce the form itself
    CHECK(evaluate_monomial(plain_letter(5), f) == f.to_poly("x"));

    // powers of one linear form kill every genuine bracket
    TernaryForm power = TernaryForm::from_poly(random_ternary_linear(rng).pow(5), "x");
    BracketMonomial hess = parse_tableau(parse_tableau_spec("5,3|0,2"));
    CHECK(evaluate_monomial(hess, power).is_zero());
    BracketMonomial dets = parse_tableau(parse_tableau_spec("5,3,3|0,2,0|0,0,2"));
    CHECK(evaluate_monomial(dets, TernaryForm::from_poly(random_ternary_linear(rng).pow(5), "x"))
              .is_zero());

    // wrong letter degree is rejected
    CHECK_THROWS_AS(evaluate_monomial(plain_letter(4), f), std::invalid_argument);
    TernaryForm quartic = TernaryForm::monomial({2, 2, 0});
    CHECK_THROWS_AS(evaluate_monomial(hess, quartic), std::invalid_argument);
}

TEST_CASE("quintic basis values on x0^3 x1^2") {
    TernaryForm m32 = TernaryForm::monomial({3, 2, 0});
    BracketMonomial psi1 = parse_tableau(parse_tableau_spec("5,3,4,4|0,2,1,1"));
    BracketMonomial psi2 = parse_tableau(parse_tableau_spec("5,1,5,5|0,4,0,0"));

    // expected monomial (57/2500) x0^8 x1^4 u2^4 over vars (u, x)
    MultiPoly expect1(std::vector<VarSet>{{"u", 3}, {"x", 3}});
    expect1.add_term({0, 0, 4, 8, 4, 0}, Rational(Integer(57), Integer(2500)));
    CHECK(evaluate_monomial(psi1, m32) == expect1);

    MultiPoly expect2(std::vector<VarSet>{{"u", 3}, {"x", 3}});
    expect2.add_term({0, 0, 4, 8, 4, 0}, Rational(Integer(3), Integer(50)));
    CHECK(evaluate_monomial(psi2, m32) == expect2);

    // the vanishing combination and its failure for other weights
    Concomitant balanced{{Rational(50), psi1}, {Rational(-19), psi2}};
    CHECK(evaluate_concomitant(balanced, m32).is_zero());
    Concomitant unbalanced{{Rational(50), psi1}, {Rational(19), psi2}};
    CHECK_FALSE(evaluate_concomitant(unbalanced, m32).is_zero());
}

TEST_CASE("bidegree bookkeeping and coefficient degree") {
    TernaryForm f(5);
    f.add_term({3, 2, 0}, Rational(1));
    f.add_term({0, 0, 5}, Rational(1));
    f.add_term({1, 1, 3}, Rational(-2));
    TernaryForm f2(5);
    for (const auto& [e, c] : f.coeffs) f2.add_term(e, c * Rational(2));

    auto lists = degree3_concomitants();
    auto deg4 = degree4_concomitants();
    lists.insert(lists.end(), deg4.begin(), deg4.end());
    for (const auto& entry : lists)
        for (const auto& term : entry) {
            const auto& mono = term.mono;
            int r = static_cast<int>(mono.letter_degrees().size());
            MultiPoly v = evaluate_monomial(mono, f);
            MultiPoly v2 = evaluate_monomial(mono, f2);
            CAPTURE(mono.str());
            CHECK(v2 == Rational(2).pow(r) * v);
            if (v.is_zero()) continue;
            CHECK(v.is_homogeneous_in("x"));
            CHECK(v.is_homogeneous_in("u"));
            CHECK(v.degree_in("x") == mono.order());
            CHECK(v.degree_in("u") == mono.cls());
        }
}

TEST_CASE("squared concomitant equals product of evaluations") {
    std::mt19937 rng(62u);
    std::uniform_int_distribution<int> cd(-3, 3);
    TernaryForm f(5);
    while (static_cast<int>(f.coeffs.size()) < 4) {
        std::uniform_int_distribution<int> ed(0, 5);
        int a = ed(rng), b = ed(rng) % (6 - a);
        f.add_term({a, b, 5 - a - b}, Rational(cd(rng)));
    }
    BracketMonomial half = parse_tableau(parse_tableau_spec("5,1|0,4"));
    BracketMonomial squared = half * half.renamed({{"alpha", "gamma"}, {"beta", "delta"}});
    MultiPoly once = evaluate_monomial(half, f);
    CHECK(evaluate_monomial(squared, f) == once * once);
}

TEST_CASE("unimodular equivariance") {
    std::mt19937 rng(63u);
    TernaryForm f(5);
    f.add_term({5, 0, 0}, Rational(1));
    f.add_term({3, 2, 0}, Rational(-1));
    f.add_term({0, 4, 1}, Rational(2));
    BracketMonomial mono = parse_tableau(parse_tableau_spec("5,3|0,2"));

    for (int trial = 0; trial < 3; ++trial) {
        Mat3 n = random_unimodular(rng);
        REQUIRE(det3i(n) == 1);
        MultiPoly composed = subst_components(f.to_poly("x"), "x", matrix_columns_on(n, "x"));
        MultiPoly lhs = evaluate_monomial(mono, TernaryForm::from_poly(composed, "x"));

        MultiPoly rhs = evaluate_monomial(mono, f);
        rhs = subst_components(rhs, "x", matrix_columns_on(n, "x"));
        rhs = subst_components(rhs, "u", matrix_columns_on(cofactor(n), "u"));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generator lists vanish on a split quintic") {
    std::mt19937 rng(64u);
    TernaryForm f = random_split_quintic(rng);
    auto deg3 = degree3_concomitants();
    REQUIRE(deg3.size() == 7);
    for (const auto& entry : deg3) CHECK(evaluate_concomitant(entry, f).is_zero());
    auto deg4 = degree4_concomitants();
    REQUIRE(deg4.size() == 4);
    for (const auto& entry : deg4) CHECK(evaluate_concomitant(entry, f).is_zero());
}

TEST_CASE("quintic report") {
    QuinticReport rep = verify_quintic_lists(7u, 2);
    CHECK(rep.vanish_deg3);
    CHECK(rep.vanish_deg4);
    CHECK(rep.independent);
    CHECK(rep.ratio_ok);
    CHECK(rep.ratio.first == 50);
    CHECK(rep.ratio.second == -19);
    CHECK(rep.failures.empty());
    CHECK(rep.ok());
}

} // TEST_SUITE

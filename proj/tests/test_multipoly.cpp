#include <doctest.h>

#include "omegacalc/multipoly.hpp"

#include <random>
#include <stdexcept>

using namespace omegacalc;

namespace {

const std::vector<VarSet> XY{{"x", 2}, {"y", 2}};

MultiPoly random_poly(std::mt19937& rng, const std::vector<VarSet>& vars, int nterms,
                      int maxexp = 3) {
    MultiPoly p(vars);
    int nc = 0;
    for (const auto& v : vars) nc += v.arity;
    std::uniform_int_distribution<int> ed(0, maxexp), cd(-5, 5);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> exp(static_cast<size_t>(nc));
        for (auto& e : exp) e = ed(rng);
        p.add_term(std::move(exp), Rational(cd(rng)));
    }
    return p;
}

} // namespace

TEST_SUITE("multipoly") {

TEST_CASE("varset list validation") {
    CHECK_THROWS_AS(MultiPoly({{"x", 2}, {"x", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly({{"y", 2}, {"x", 2}}), std::invalid_argument); // unsorted
    CHECK_THROWS_AS(MultiPoly({{"x", 0}}), std::invalid_argument);
}

TEST_CASE("term bookkeeping") {
    MultiPoly p({{"x", 2}});
    p.add_term({1, 0}, Rational(2));
    p.add_term({1, 0}, Rational(3));
    CHECK(p.coeff({1, 0}) == Rational(5));
    p.add_term({1, 0}, Rational(-5));
    CHECK(p.is_zero());
    CHECK_FALSE(p.total_degree().has_value());
    CHECK(p.degree_in("x") == 0);
}

TEST_CASE("degrees and homogeneity") {
    MultiPoly p({{"x", 2}, {"y", 2}});
    p.add_term({2, 0, 1, 0}, Rational(1));
    p.add_term({0, 2, 0, 1}, Rational(-4));
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in("x") == 2);
    CHECK(p.degree_in("y") == 1);
    CHECK(p.is_homogeneous());
    CHECK(p.is_homogeneous_in("x"));
    p.add_term({1, 0, 0, 0}, Rational(1));
    CHECK_FALSE(p.is_homogeneous());
    CHECK_FALSE(p.is_homogeneous_in("x"));
    CHECK(p.mentions("x"));
}

TEST_CASE("grlex order: total degree first, then lex") {
    GrlexLess lt;
    CHECK(lt({0, 3}, {4, 0}));        // degree 3 < 4
    CHECK(lt({1, 1}, {2, 0}));        // same degree, lex
    CHECK_FALSE(lt({2, 0}, {1, 1}));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = random_poly(rng, XY, 4);
        MultiPoly q = random_poly(rng, XY, 4);
        MultiPoly r = random_poly(rng, XY, 4);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p - p == MultiPoly(XY));
    }
}

TEST_CASE("pow") {
    std::mt19937 rng(7);
    MultiPoly p = random_poly(rng, {{"x", 2}}, 3);
    CHECK(p.pow(0) == MultiPoly::constant({{"x", 2}}, Rational(1)));
    CHECK(p.pow(1) == p);
    CHECK(p.pow(3) == p * p * p);
    CHECK_THROWS_AS(p.pow(-1), std::invalid_argument);
}

TEST_CASE("equality across varset lists") {
    MultiPoly p({{"x", 2}});
    p.add_term({1, 1}, Rational(3));
    MultiPoly q(XY);
    q.add_term({1, 1, 0, 0}, Rational(3));
    CHECK(p == q);                    // unused y is invisible
    MultiPoly r = p.with_vars(XY);
    CHECK(r.vars().size() == 2);
    CHECK(r == p);
    CHECK(r.dropped("y") == p);
    CHECK_THROWS_AS(r.dropped("x"), std::invalid_argument);
}

TEST_CASE("merge_vars") {
    auto m = merge_vars({{"a", 2}, {"x", 2}}, {{"b", 2}, {"x", 2}});
    CHECK(m == std::vector<VarSet>{{"a", 2}, {"b", 2}, {"x", 2}});
    CHECK_THROWS_AS(merge_vars({{"x", 2}}, {{"x", 3}}), std::invalid_argument);
}

TEST_CASE("pairing and brackets") {
    std::vector<VarSet> vars{{"a", 2}, {"b", 2}};
    MultiPoly ab = bracket2(vars, "a", "b");
    CHECK(ab.coeff({1, 0, 0, 1}) == Rational(1));   // a0 b1
    CHECK(ab.coeff({0, 1, 1, 0}) == Rational(-1));  // -a1 b0
    CHECK(ab == -bracket2(vars, "b", "a"));

    std::vector<VarSet> v3{{"p", 3}, {"q", 3}, {"r", 3}};
    MultiPoly det = bracket3(v3, "p", "q", "r");
    CHECK(det.terms().size() == 6);
    // det of the identity matrix: p=(1,0,0), q=(0,1,0), r=(0,0,1)
    CHECK(det.coeff({1, 0, 0, 0, 1, 0, 0, 0, 1}) == Rational(1));
    CHECK(det == -bracket3(v3, "q", "p", "r"));

    std::vector<VarSet> va{{"a", 2}, {"x", 2}};
    MultiPoly ax = pairing(va, "a", "x");
    CHECK(ax.coeff({1, 0, 1, 0}) == Rational(1));
    CHECK(ax.coeff({0, 1, 0, 1}) == Rational(1));
    CHECK(ax.terms().size() == 2);
}

TEST_CASE("binary form basics") {
    // F = x0^2 + 4 x0 x1 + x1^2
    BinaryForm f(2, {Rational(1), Rational(4), Rational(1)});
    CHECK(f.coeff(1) == Rational(4));
    CHECK(f.scaled(1) == Rational(2));     // alpha_i = c_i / C(d,i)
    CHECK(BinaryForm::from_scaled(2, {Rational(1), Rational(2), Rational(1)}) == f);
    CHECK(f.evaluate(Rational(1), Rational(2)) == Rational(13));
    CHECK_THROWS_AS(f.coeff(3), std::out_of_range);

    CHECK(f.dx0() == BinaryForm(1, {Rational(2), Rational(4)}));
    CHECK(f.dx1() == BinaryForm(1, {Rational(4), Rational(2)}));
    CHECK(f.diff(1, 1) == BinaryForm(0, {Rational(4)}));
    CHECK(f.diff(3, 0).is_zero());

    CHECK(BinaryForm::from_poly(f.to_poly()) == f);
    CHECK(f.to_poly("w").degree_in("w") == 2);
}

TEST_CASE("binary form zero-degree conventions") {
    BinaryForm z(3);
    CHECK(z.is_zero());
    CHECK(z.degree() == 3);
    BinaryForm f = BinaryForm::monomial(2, 1); // x0 x1
    CHECK((BinaryForm(2) + f) == f);           // zero form absorbs
    CHECK((f + BinaryForm(5)) == f);           // even with mismatched formal degree
    CHECK(BinaryForm(2) == BinaryForm(7));     // zero forms all equal
    CHECK_THROWS_AS(f + BinaryForm::monomial(3, 0), std::invalid_argument);
}

TEST_CASE("binary form algebra and composition") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> cd(-4, 4);
    auto rf = [&](int d) {
        std::vector<Rational> cs;
        for (int i = 0; i <= d; ++i) cs.emplace_back(cd(rng));
        return BinaryForm(d, cs);
    };
    for (int t = 0; t < 5; ++t) {
        BinaryForm a = rf(3), b = rf(2);
        CHECK((a * b).degree() == 5);
        CHECK(BinaryForm::from_poly(a.to_poly() * b.to_poly()) == a * b);
        CHECK(a.pow(2) == a * a);
        // composing with g then its inverse recovers the form
        BinaryForm ag = a.compose_linear(Rational(2), Rational(1), Rational(1), Rational(1));
        BinaryForm back = ag.compose_linear(Rational(1), Rational(-1), Rational(-1), Rational(2));
        CHECK(back == a);
    }
    // composition is evaluation-compatible: (F.g)(x) = F(g00 x0 + g01 x1, g10 x0 + g11 x1)
    BinaryForm f = rf(4);
    BinaryForm fg = f.compose_linear(Rational(1), Rational(2), Rational(3), Rational(4));
    CHECK(fg.evaluate(Rational(1), Rational(1)) == f.evaluate(Rational(3), Rational(7)));
}

} // TEST_SUITE

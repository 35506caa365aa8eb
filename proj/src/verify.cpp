#include "omegacalc/verify.hpp"

#include "omegacalc/covariants.hpp"
#include "omegacalc/emap.hpp"
#include "omegacalc/operators.hpp"
#include "omegacalc/ternary.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace omegacalc {

namespace {

template <class... Ts>
std::string cat(Ts&&... ts) {
    std::ostringstream os;
    (os << ... << ts);
    return os.str();
}

struct Recorder {
    long checks = 0;
    long failed = 0;
    std::vector<std::string> first_failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (first_failures.size() < 4) first_failures.push_back(what);
    }
};

BinaryForm random_form(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> cd(-5, 5);
    std::vector<Rational> cs;
    for (int i = 0; i <= d; ++i) cs.emplace_back(cd(rng));
    return BinaryForm(d, cs);
}

std::vector<BinaryForm> random_lines(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> cd(-4, 4);
    std::vector<BinaryForm> out;
    while (static_cast<int>(out.size()) < n) {
        BinaryForm l(1, {Rational(cd(rng)), Rational(cd(rng))});
        if (l.is_zero()) continue;
        bool prop = false;
        for (const auto& m : out)
            if (l.coeff(0) * m.coeff(1) == l.coeff(1) * m.coeff(0)) prop = true;
        if (!prop) out.push_back(l);
    }
    return out;
}

// 1. The transvectant of two products of powers of the same two lines reduces
//    to a single scaled bracket monomial.
std::string check_monomial_law(Recorder& rec, bool quick) {
    std::mt19937 rng(101);
    const int emax = quick ? 3 : 5;
    const int pairs = quick ? 3 : 10;
    std::uniform_int_distribution<int> cd(-6, 6);
    for (int t = 0; t < pairs; ++t) {
        Rational a0, a1, b0, b1, br;
        do {
            a0 = Rational(cd(rng));
            a1 = Rational(cd(rng));
            b0 = Rational(cd(rng));
            b1 = Rational(cd(rng));
            br = a0 * b1 - a1 * b0;
        } while (br.is_zero());
        BinaryForm l1(1, {a0, a1}), l2(1, {b0, b1});
        std::vector<BinaryForm> p1{BinaryForm(0, {Rational(1)})}, p2 = p1;
        for (int i = 1; i <= 2 * emax; ++i) {
            p1.push_back(p1.back() * l1);
            p2.push_back(p2.back() * l2);
        }
        for (int x1 = 0; x1 <= emax; ++x1)
            for (int x2 = 0; x2 <= emax; ++x2)
                for (int y1 = 0; y1 <= emax; ++y1)
                    for (int y2 = 0; y2 <= emax; ++y2) {
                        BinaryForm A = p1[static_cast<size_t>(x1)] * p2[static_cast<size_t>(x2)];
                        BinaryForm B = p1[static_cast<size_t>(y1)] * p2[static_cast<size_t>(y2)];
                        int kmax = std::min({emax, x1 + x2, y1 + y2});
                        for (int k = 0; k <= kmax; ++k) {
                            Rational n = n_coeff(MonomialSpec{x1, x2, y1, y2, k});
                            BinaryForm rhs =
                                n.is_zero()
                                    ? BinaryForm(0)
                                    : n * br.pow(k) * p1[static_cast<size_t>(x1 + y1 - k)] *
                                          p2[static_cast<size_t>(x2 + y2 - k)];
                            rec.expect(transvectant(A, B, k) == rhs,
                                       cat("spec [", x1, ",", x2, ";", y1, ",", y2, ";", k,
                                           "], line pair ", t));
                        }
                    }
    }
    return cat("exponents <= ", emax, " against ", pairs, " random line pairs");
}

// 2. The letter-bracket operator evaluates to the factorial-rescaled
//    transvectant of the corresponding line-power monomials.
std::string check_u_scaling(Recorder& rec, bool quick) {
    const int emax = quick ? 2 : 3;
    const std::vector<VarSet> vars{{"a", 2}, {"b", 2}, {"x", 2}};
    MultiPoly ax = pairing(vars, "a", "x"), bx = pairing(vars, "b", "x");
    for (int a1 = 0; a1 <= emax; ++a1)
        for (int a2 = 0; a2 <= emax; ++a2)
            for (int b1 = 0; b1 <= emax; ++b1)
                for (int b2 = 0; b2 <= emax; ++b2) {
                    MultiPoly A = ax.pow(a1) * bx.pow(a2), B = ax.pow(b1) * bx.pow(b2);
                    int kmax = std::min({emax, a1 + a2, b1 + b2});
                    for (int k = 0; k <= kmax; ++k) {
                        MultiPoly lhs = u_bracket(MonomialSpec{a1, a2, b1, b2, k});
                        MultiPoly rhs =
                            rfact(a1 + a2) * rfact(b1 + b2) * transvectant(A, B, k, "x");
                        rec.expect(lhs == rhs,
                                   cat("spec [", a1, ",", a2, ";", b1, ",", b2, ";", k, "]"));
                    }
                }
    return cat("all specs with entries <= ", emax);
}

// 3. Literal operator application agrees with the closed form of the
//    integrand across the whole legal parameter range.
std::string check_integrand_oracles(Recorder& rec, bool quick) {
    const int dmax = quick ? 4 : 6;
    for (int d = 3; d <= dmax; ++d)
        for (int e = 1; 2 * e < d; ++e)
            for (int r : {2, 3})
                for (int p : a_set(e, r))
                    for (int pp : a_set(e, r + 1)) {
                        EParams params{d, e, r, p, pp};
                        rec.expect(e_bruteforce(params) == e_closedform(params),
                                   cat("(d=", d, ",e=", e, ",r=", r, ",p=", p, ",p'=", pp, ")"));
                    }
    return cat("d <= ", dmax, ", r in {2,3}, all legal (p, p')");
}

// 4. Every sweep tuple lands in one of the nine dispatch cases with a
//    provably nonzero two-term sum (the per-case closed forms are asserted
//    inside choose_p).
std::string check_case_sweep(Recorder& rec, bool quick) {
    const int dmax = quick ? 6 : 8, rmax = quick ? 4 : 5;
    std::vector<CaseRow> rows;
    try {
        rows = verify_cases(dmax, rmax);
    } catch (const std::exception& ex) {
        rec.expect(false, cat("sweep aborted: ", ex.what()));
        return "sweep aborted";
    }
    for (const auto& row : rows) {
        const auto& res = row.result;
        std::string at = cat("(d=", row.d, ",e=", row.e, ",r=", row.r, ",p'=", row.pprime, ")");
        rec.expect(res.case_id >= 1 && res.case_id <= 9, cat("case id out of range at ", at));
        rec.expect(!res.s_value.is_zero(), cat("S = 0 at ", at));
        rec.expect(res.bounds.H - res.bounds.L <= 1, cat("more than two terms at ", at));
        auto legal = a_set(row.e, row.r);
        rec.expect(std::find(legal.begin(), legal.end(), res.p) != legal.end(),
                   cat("chosen p illegal at ", at));
    }
    return cat(rows.size(), " tuples, d <= ", dmax, ", r <= ", rmax);
}

// 5. The numerator covariant of the quotient Hessian: with
//    N_ij = Q^3 d_ij(P/Q) polynomial, Q^4 He(P/Q) = J(P,Q) is equivalent to
//    J Q^2 = N00 N11 - N01^2, checked symbolically and on random instances.
std::string check_quotient_hessian(Recorder& rec, bool quick) {
    const int symb = quick ? 2 : 3;
    for (int p = 0; p <= symb; ++p)
        for (int q = 0; q <= symb; ++q) {
            MultiPoly P = generic_form(p, "c"), Q = generic_form(q, "d");
            auto d1 = [](const MultiPoly& f, int i) { return differentiate(f, "x", i, 1); };
            auto nij = [&](int i, int j) {
                return d1(d1(P, i), j) * Q * Q -
                       (d1(P, i) * d1(Q, j) + d1(P, j) * d1(Q, i)) * Q -
                       P * d1(d1(Q, i), j) * Q + Rational(2) * P * d1(Q, i) * d1(Q, j);
            };
            MultiPoly lhs = j_quotient(P, Q, "x") * Q * Q;
            MultiPoly rhs = nij(0, 0) * nij(1, 1) - nij(0, 1) * nij(0, 1);
            rec.expect(lhs == rhs, cat("symbolic p=", p, ", q=", q));
        }
    std::mt19937 rng(105);
    const int trials = quick ? 12 : 50;
    std::uniform_int_distribution<int> dd(0, 5);
    auto d1b = [](const BinaryForm& f, int i) { return i == 0 ? f.dx0() : f.dx1(); };
    for (int t = 0; t < trials; ++t) {
        int p = dd(rng), q = dd(rng);
        BinaryForm P = random_form(rng, p), Q = random_form(rng, q);
        auto nij = [&](int i, int j) {
            return d1b(d1b(P, i), j) * Q * Q -
                   (d1b(P, i) * d1b(Q, j) + d1b(P, j) * d1b(Q, i)) * Q -
                   P * d1b(d1b(Q, i), j) * Q + Rational(2) * P * d1b(Q, i) * d1b(Q, j);
        };
        BinaryForm lhs = j_quotient(P, Q) * Q * Q;
        BinaryForm rhs = nij(0, 0) * nij(1, 1) - nij(0, 1) * nij(0, 1);
        rec.expect(lhs == rhs, cat("random instance ", t, " (p=", p, ", q=", q, ")"));
    }
    for (int q = 0; q <= symb; ++q)
        rec.expect(j_quotient(generic_form(q + 1, "c"), generic_form(q, "d"), "x").is_zero(),
                   cat("nonzero numerator at p=q+1, q=", q));
    return cat("symbolic p,q <= ", symb, " plus ", trials, " random instances, p,q <= 5");
}

// 6. The two-step series contraction (Q^2, Q)_2 collapses onto Q (Q,Q)_2 with
//    the predicted degree-dependent coefficient.
std::string check_series_contraction(Recorder& rec, bool quick) {
    const int qmax = quick ? 4 : 6;
    for (int q = 2; q <= qmax; ++q) {
        MultiPoly Q = generic_form(q, "c");
        MultiPoly lhs = transvectant(Q * Q, Q, 2, "x");
        MultiPoly rhs = Rational(3 * q - 2, 2 * (2 * q - 1)) * Q * transvectant(Q, Q, 2, "x");
        rec.expect(lhs == rhs, cat("coefficient fails at q=", q));
    }
    return cat("symbolic generic forms, q = 2..", qmax);
}

// 7. The determinant construction and the transvectant compound of the
//    two-root covariant agree up to a single degree-dependent scalar; the
//    compound coefficients are pinned by vanishing on two-root forms, and the
//    degree-3 invariant is the cubic discriminant up to scale.
std::string check_two_root_covariant(Recorder& rec, bool quick) {
    std::mt19937 rng(107);
    const int samples = quick ? 4 : 8;
    for (int d = 3; d <= 7; ++d) {
        Rational scale;
        bool have = false;
        for (int t = 0; t < samples; ++t) {
            BinaryForm f = random_form(rng, d);
            BinaryForm w = wronskian_D(f), c = compound_D(f);
            rec.expect(w.is_zero() == c.is_zero(), cat("vanishing mismatch at d=", d));
            if (w.is_zero()) continue;
            int idx = 0;
            while (w.coeff(idx).is_zero()) ++idx;
            if (!have) {
                scale = c.coeff(idx) / w.coeff(idx);
                have = true;
                rec.expect(!scale.is_zero(), cat("zero scale at d=", d));
            }
            rec.expect(c == scale * w, cat("scale drifts at d=", d, ", sample ", t));
        }
        rec.expect(have, cat("no informative sample at d=", d));
    }

    auto t_pair = [](const BinaryForm& f) {
        BinaryForm f2 = f * f;
        return std::pair<BinaryForm, BinaryForm>{transvectant(f2, f2, 6),
                                                 transvectant(f2, transvectant(f, f, 2), 4)};
    };
    auto t_first = [](const BinaryForm& f) {
        BinaryForm f2 = f * f;
        return transvectant(f2, f2, 6);
    };
    // at degree 3 the second compound does not exist, so the list is just (1)
    for (int t = 0; t < 4; ++t) {
        auto lines = random_lines(rng, 2);
        BinaryForm f = lines[0].pow(2) * lines[1];
        rec.expect(t_first(f).is_zero(), cat("single term survives at d=3, sample ", t));
    }
    rec.expect(
        !t_first(BinaryForm(3, {Rational(1), Rational(0), Rational(1), Rational(1)})).is_zero(),
        "degree-3 compound identically zero");
    const std::pair<int, std::pair<int, int>> pinned[] = {{4, {7, -5}}, {5, {129, -250}}};
    for (const auto& [d, xi] : pinned) {
        bool informative = false;
        for (int t = 0; t < 3; ++t)
            for (int e = 1; 2 * e <= d; ++e) {
                auto lines = random_lines(rng, 2);
                BinaryForm f = lines[0].pow(d - e) * lines[1].pow(e);
                auto [t1, t2] = t_pair(f);
                rec.expect((Rational(xi.first) * t1 + Rational(xi.second) * t2).is_zero(),
                           cat("pair (", xi.first, ",", xi.second, ") fails at d=", d, ", e=", e));
                if (!t1.is_zero()) informative = true;
            }
        rec.expect(informative, cat("coefficient pair unconstrained at d=", d));
    }

    auto disc3 = [](const BinaryForm& f) {
        Rational a = f.coeff(0), b = f.coeff(1), c = f.coeff(2), d = f.coeff(3);
        return Rational(18) * a * b * c * d - Rational(4) * b.pow(3) * d + b.pow(2) * c.pow(2) -
               Rational(4) * a * c.pow(3) - Rational(27) * a.pow(2) * d.pow(2);
    };
    Rational dscale;
    bool dhave = false;
    for (int t = 0; t < 12; ++t) {
        BinaryForm f = random_form(rng, 3);
        Rational w = wronskian_D(f).coeff(0), ds = disc3(f);
        rec.expect(w.is_zero() == ds.is_zero(), cat("discriminant vanishing mismatch, sample ", t));
        if (ds.is_zero()) continue;
        if (!dhave) {
            dscale = w / ds;
            dhave = true;
            rec.expect(!dscale.is_zero(), "zero discriminant scale");
        }
        rec.expect(w == dscale * ds, cat("discriminant scale drifts, sample ", t));
    }
    rec.expect(dhave, "no squarefree cubic sample");
    return cat("d = 3..7, ", samples, " samples each; coefficient pairs (1), (7,-5), (129,-250)");
}

// 8. Membership classification: the defining covariants vanish on two-line
//    members (as do the paired iterated-transvectant differences), stay
//    nonzero on random generic forms, and classify the monomials correctly.
std::string check_membership(Recorder& rec, bool quick) {
    std::mt19937 rng(108);
    const int dmax = quick ? 5 : 6, members = quick ? 3 : 10;
    for (int d = 3; d <= dmax; ++d) {
        auto words = valid_words(d);
        for (int e = 1; 2 * e <= d; ++e) {
            for (int t = 0; t < members; ++t) {
                auto lines = random_lines(rng, 2);
                BinaryForm f = lines[0].pow(d - e) * lines[1].pow(e);
                std::string at = cat("(d=", d, ", e=", e, ", sample ", t, ")");
                MembershipReport r = membership(f, e);
                rec.expect(r.in_X_e && r.in_Y, cat("member missed at ", at));
                rec.expect(r.wronskian.is_zero(), cat("D != 0 on member at ", at));
                rec.expect(r.ce.is_zero(), cat("C_e != 0 on member at ", at));
                for (size_t i = 0; i < words.size(); ++i)
                    for (size_t j = i + 1; j < words.size(); ++j) {
                        if (words[i].weight() != words[j].weight()) continue;
                        rec.expect(psi(f, words[i], words[j], e).is_zero(),
                                   cat("psi pair (", i, ",", j, ") nonzero at ", at));
                    }
            }
            for (int f = 1; f <= d - 1; ++f) {
                bool inX = (f == e || f == d - e);
                rec.expect(membership(BinaryForm::monomial(d, f), e).in_X_e == inX,
                           cat("monomial f=", f, " misclassified at (d=", d, ", e=", e, ")"));
            }
        }
        // squarefree certified by the derivative gcd, so >= 3 distinct roots
        int done = 0;
        for (int attempts = 0; done < members && attempts < 200; ++attempts) {
            BinaryForm f = random_form(rng, d);
            bool squarefree = false;
            try {
                squarefree = repeated_part(f).degree() == 0;
            } catch (const std::exception&) {
                squarefree = false;
            }
            if (!squarefree) continue;
            rec.expect(!wronskian_D(f).is_zero(),
                       cat("D = 0 on squarefree form (d=", d, ", sample ", done, ")"));
            ++done;
        }
        rec.expect(done == members, cat("squarefree draws exhausted at d=", d));
    }
    return cat("d <= ", dmax, ", ", members, " members and generic forms per degree");
}

// 9. Character identities: symmetric-power reciprocity, nonnegativity of the
//    ideal characters, and the exact description of the degree-2 exception.
std::string check_characters(Recorder& rec, bool quick) {
    const int nmax = quick ? 6 : 8;
    for (int r = 0; r <= nmax; ++r)
        for (int d = 0; d <= nmax; ++d)
            rec.expect(plethysm(r, d) == plethysm(d, r),
                       cat("reciprocity fails at r=", r, ", d=", d));
    for (int r : {3, 4})
        for (int d = 3; d <= nmax; ++d)
            for (int e = 1; 2 * e < d; ++e)
                try {
                    rec.expect(ideal_character(d, e, r).nonnegative(),
                               cat("negative multiplicity at (d=", d, ", e=", e, ", r=", r, ")"));
                } catch (const std::exception& ex) {
                    rec.expect(false,
                               cat("ideal character threw at (d=", d, ", e=", e, ", r=", r,
                                   "): ", ex.what()));
                }
    for (int d = 3; d <= nmax; ++d)
        for (int e = 1; 2 * e < d; ++e) {
            bool exceptional = (d % 2 == 1 && e == (d - 1) / 2);
            rec.expect(ideal_character(d, e, 2).is_zero() == exceptional,
                       cat("degree-2 exception wrong at (d=", d, ", e=", e, ")"));
        }
    return cat("reciprocity r,d <= ", nmax, "; ideal characters r = 2,3,4");
}

// 10. The regularity bound: constant value 4 for binary forms, and agreement
//     with a direct evaluation of the defining maximum for small n.
std::string check_regularity(Recorder& rec, bool quick) {
    (void)quick;
    for (int d = 3; d <= 12; ++d)
        for (int e = 1; 2 * e < d; ++e)
            rec.expect(regularity_m0(1, d, e) == 4, cat("m0(1,", d, ",", e, ") != 4"));
    auto direct = [](int n, int d, int e) {
        Rational best(4);
        Rational c2 = Rational(n + 2) + Rational(Integer(1 - n), Integer(d));
        Rational c3 = Rational(2 * n + 1) - Rational(Integer(n), Integer(e));
        if ((c2 - best).sign() > 0) best = c2;
        if ((c3 - best).sign() > 0) best = c3;
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), best.num().get_mpz_t(), best.den().get_mpz_t());
        return q;
    };
    const struct {
        int n, d, e, want;
    } pins[] = {{2, 5, 2, 4}, {3, 7, 1, 5}, {2, 8, 3, 5}, {10, 100, 1, 12}, {4, 9, 2, 7}};
    for (const auto& pin : pins)
        rec.expect(regularity_m0(pin.n, pin.d, pin.e) == pin.want,
                   cat("pinned m0(", pin.n, ",", pin.d, ",", pin.e, ") != ", pin.want));
    for (int n : {2, 3})
        for (int d = 3; d <= 10; ++d)
            for (int e = 1; 2 * e < d; ++e)
                rec.expect(regularity_m0(n, d, e) == direct(n, d, e),
                           cat("m0(", n, ",", d, ",", e, ") drifts from the defining maximum"));
    return "n = 1 sweep d <= 12; pinned spots; n = 2,3 vs direct evaluation";
}

// 11. Ternary quintics: the two pinned basis values, vanishing of both
//     generator lists on random split quintics, independence, and the exact
//     weight ratio of the balanced combination.
std::string check_ternary_lists(Recorder& rec, bool quick) {
    TernaryForm m32 = TernaryForm::monomial({3, 2, 0});
    BracketMonomial psi1 = parse_tableau(parse_tableau_spec("5,3,4,4|0,2,1,1"));
    BracketMonomial psi2 = parse_tableau(parse_tableau_spec("5,1,5,5|0,4,0,0"));
    MultiPoly want1(std::vector<VarSet>{{"u", 3}, {"x", 3}});
    want1.add_term({0, 0, 4, 8, 4, 0}, Rational(Integer(57), Integer(2500)));
    MultiPoly want2(std::vector<VarSet>{{"u", 3}, {"x", 3}});
    want2.add_term({0, 0, 4, 8, 4, 0}, Rational(Integer(3), Integer(50)));
    rec.expect(evaluate_monomial(psi1, m32) == want1, "first pinned basis value off");
    rec.expect(evaluate_monomial(psi2, m32) == want2, "second pinned basis value off");

    const int trials = quick ? 1 : 5;
    QuinticReport rep = verify_quintic_lists(11u, trials);
    rec.expect(rep.vanish_deg3, "cubic list fails to vanish");
    rec.expect(rep.vanish_deg4, "quartic list fails to vanish");
    rec.expect(rep.independent, "basis pair dependent on the two-term quintic");
    rec.expect(rep.ratio_ok && rep.ratio.first == 50 && rep.ratio.second == -19,
               cat("weight ratio ", rep.ratio.first, ":", rep.ratio.second, " != 50:-19"));
    for (const auto& f : rep.failures) rec.expect(false, f);
    return cat("pinned values; both lists on ", trials, " random split quintics; independence");
}

// 12. Angular-momentum sanity: domain violations give exact zeros, parity
//     zeros appear where predicted, and the stretched and pinned couplings
//     take their exact values.
std::string check_angular_sanity(Recorder& rec, bool quick) {
    (void)quick;
    for (int twoJ1 = 0; twoJ1 <= 8; ++twoJ1)
        for (int twoJ2 = 0; twoJ2 <= 8; ++twoJ2)
            for (int twoJ = 0; twoJ <= 20; ++twoJ) {
                bool triangle = twoJ >= std::abs(twoJ1 - twoJ2) && twoJ <= twoJ1 + twoJ2 &&
                                (twoJ1 + twoJ2 + twoJ) % 2 == 0;
                if (triangle) continue;
                SignedSquare c =
                    clebsch_gordan({twoJ1, twoJ2, twoJ, twoJ1, -twoJ2, twoJ1 - twoJ2});
                rec.expect(c.is_zero(),
                           cat("triangle violation survives: ", twoJ1, " ", twoJ2, " ", twoJ));
            }
    for (int j1 = 0; j1 <= 6; ++j1)
        for (int j2 = 0; j2 <= 6; ++j2)
            for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j) {
                if ((j1 + j2 + j) % 2 == 0) continue;
                rec.expect(clebsch_gordan({2 * j1, 2 * j2, 2 * j, 0, 0, 0}).is_zero(),
                           cat("odd-parity CG nonzero: ", j1, " ", j2, " ", j));
                rec.expect(wigner_3j({2 * j1, 2 * j2, 2 * j, 0, 0, 0}).is_zero(),
                           cat("odd-parity 3j nonzero: ", j1, " ", j2, " ", j));
            }
    for (int twoJ1 = 0; twoJ1 <= 12; ++twoJ1)
        for (int twoJ2 = 0; twoJ2 <= 12; ++twoJ2) {
            SignedSquare c = clebsch_gordan(
                {twoJ1, twoJ2, twoJ1 + twoJ2, twoJ1, twoJ2, twoJ1 + twoJ2});
            rec.expect(c.sign == 1 && c.square == Rational(1),
                       cat("stretched CG != 1 at ", twoJ1, ", ", twoJ2));
        }
    SignedSquare c = clebsch_gordan({2, 2, 4, 0, 0, 0});
    rec.expect(c.sign == 1 && c.square == Rational(2, 3), "squared CG pin 2/3");
    SignedSquare w = wigner_3j({2, 2, 4, 0, 0, 0});
    rec.expect(w.sign == 1 && w.square == Rational(2, 15), "squared 3j pin 2/15");
    return "domain zeros, parity zeros, stretched couplings, pinned squares";
}

using CheckFn = std::string (*)(Recorder&, bool);

struct Entry {
    int id;
    const char* name;
    CheckFn fn;
};

const Entry kEntries[kNumCriteria] = {
    {1, "monomial-transvectant-law", check_monomial_law},
    {2, "letter-bracket-scaling", check_u_scaling},
    {3, "integrand-oracle-equivalence", check_integrand_oracles},
    {4, "case-dispatch-sweep", check_case_sweep},
    {5, "quotient-hessian-identity", check_quotient_hessian},
    {6, "series-contraction", check_series_contraction},
    {7, "two-root-covariant", check_two_root_covariant},
    {8, "coincident-root-membership", check_membership},
    {9, "character-identities", check_characters},
    {10, "regularity-bound", check_regularity},
    {11, "ternary-quintic-lists", check_ternary_lists},
    {12, "angular-momentum-sanity", check_angular_sanity},
};

} // namespace

CheckResult run_criterion(int id, bool quick) {
    if (id < 1 || id > kNumCriteria)
        throw std::invalid_argument("run_criterion: id must be in 1..12");
    const Entry& entry = kEntries[id - 1];
    CheckResult out;
    out.id = entry.id;
    out.name = entry.name;
    Recorder rec;
    std::string coverage;
    auto t0 = std::chrono::steady_clock::now();
    try {
        coverage = entry.fn(rec, quick);
    } catch (const std::exception& ex) {
        rec.expect(false, cat("unexpected exception: ", ex.what()));
        coverage = "aborted";
    }
    auto t1 = std::chrono::steady_clock::now();
    out.seconds = std::chrono::duration<double>(t1 - t0).count();
    out.pass = rec.failed == 0;
    if (out.pass) {
        out.detail = cat(coverage, " (", rec.checks, " checks)");
    } else {
        std::string joined;
        for (const auto& f : rec.first_failures) joined += (joined.empty() ? "" : "; ") + f;
        out.detail = cat(rec.failed, "/", rec.checks, " checks failed: ", joined);
    }
    return out;
}

std::vector<CheckResult> run_all(bool quick) {
    std::vector<CheckResult> out;
    out.reserve(kNumCriteria);
    for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id, quick));
    return out;
}

} // namespace omegacalc

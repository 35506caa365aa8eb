#include "omegacalc/emap.hpp"

#include "omegacalc/operators.hpp"

#include <sstream>
#include <stdexcept>

namespace omegacalc {

namespace {

bool in_a_set(int p, int e, int r) { return p >= 0 && p <= r * e && p != 1; }

std::string tuple_str(int d, int e, int r, int pprime) {
    std::ostringstream os;
    os << "(d=" << d << ", e=" << e << ", r=" << r << ", p'=" << pprime << ")";
    return os.str();
}

} // namespace

void EParams::validate() const {
    if (e < 1 || 2 * e >= d) throw std::invalid_argument("EParams: need 1 <= e < d/2");
    if (r < 2) throw std::invalid_argument("EParams: need r >= 2");
    if (!in_a_set(p, e, r)) throw std::invalid_argument("EParams: p outside A_r");
    if (!in_a_set(pprime, e, r + 1)) throw std::invalid_argument("EParams: p' outside A_{r+1}");
}

MonomialSpec emap_spec(const EParams& params) {
    params.validate();
    if (params.p > params.pprime)
        throw std::invalid_argument("emap_spec: requires p <= p'");
    return MonomialSpec{params.r * (params.d - params.e) - params.p, params.d - params.e,
                        params.r * params.e - params.p, params.e, params.pprime - params.p};
}

MultiPoly e_bruteforce(const EParams& params, const std::string& a, const std::string& b,
                       const std::string& x) {
    params.validate();
    std::string y = "y";
    while (y == a || y == b || y == x) y += "y";
    auto vars = merge_vars(merge_vars({VarSet{a, 2}}, {VarSet{b, 2}}),
                           merge_vars({VarSet{x, 2}}, {VarSet{y, 2}}));
    int d = params.d, e = params.e, r = params.r, p = params.p;
    MultiPoly m = bracket2(vars, x, y).pow(p) * pairing(vars, a, x).pow(r * (d - e) - p) *
                  pairing(vars, b, x).pow(d - e) * pairing(vars, a, y).pow(r * e - p) *
                  pairing(vars, b, y).pow(e);
    return identify(omega_power(m, x, y, params.pprime), y, x);
}

MultiPoly e_closedform(const EParams& params, const std::string& a, const std::string& b,
                       const std::string& x) {
    params.validate();
    int d = params.d, e = params.e, r = params.r, p = params.p, pp = params.pprime;
    if (p > pp)
        return MultiPoly(merge_vars(merge_vars({VarSet{a, 2}}, {VarSet{b, 2}}), {VarSet{x, 2}}));
    Rational scalar = rfact(pp) * rfact((r + 1) * d - pp + 1) /
                      (rfact(pp - p) * rfact((r + 1) * (d - e) - pp) *
                       rfact((r + 1) * e - pp) * rfact((r + 1) * d - pp - p + 1));
    return scalar * u_bracket(emap_spec(params), a, b, x);
}

LHBounds lh_bounds(const EParams& params) {
    params.validate();
    int d = params.d, e = params.e, r = params.r, p = params.p, pp = params.pprime;
    return LHBounds{std::max({0, pp - p - (d - e), pp - r * e}),
                    std::min({pp - p, e, r * (d - e) - p})};
}

CaseResult choose_p(int d, int e, int r, int pprime) {
    if (e < 1 || 2 * e >= d) throw std::invalid_argument("choose_p: need 1 <= e < d/2");
    if (r < 2) throw std::invalid_argument("choose_p: need r >= 2");
    if (!in_a_set(pprime, e, r + 1))
        throw std::invalid_argument("choose_p: p' outside A_{r+1}");

    const int pp = pprime;
    int case_id = 0, p = -1;
    Rational closed;
    LHBounds claim;

    if (r == 2) {
        if (pp <= 2 * e && pp % 2 == 0) {
            case_id = 1;
            p = pp;
            closed = Rational(1) /
                     (rfact(e) * rfact(2 * (d - e) - pp) * rfact(2 * e - pp) * rfact(d - e));
            claim = {0, 0};
        } else if (pp <= 2 * e) {
            case_id = 2;
            p = pp - 1;
            closed = Rational(-pp + 1) * Rational(d - 2 * e) /
                     (rfact(e) * rfact(2 * (d - e) - pp + 1) * rfact(2 * e - pp + 1) *
                      rfact(d - e));
            claim = {0, 1};
        } else if (pp <= std::min(2 * (d - e), 3 * e)) {
            case_id = 3;
            p = 2 * e;
            closed = Rational((pp - 2 * e) % 2 == 0 ? 1 : -1) /
                     (rfact(pp - 2 * e) * rfact(3 * e - pp) * rfact(2 * (d - e) - pp) *
                      rfact(d - e));
            claim = {pp - 2 * e, pp - 2 * e};
        } else if (pp % 2 == 0) { // 2(d-e) < p' <= 3e
            case_id = 4;
            p = 2 * d - pp;
            closed = Rational((pp - 2 * e) % 2 == 0 ? 1 : -1) /
                     (rfact(pp - 2 * e) * rfact(3 * e - pp) * rfact(pp - 2 * (d - e)) *
                      rfact(3 * (d - e) - pp));
            claim = {pp - 2 * e, pp - 2 * e};
        } else if (pp < 3 * e) { // 2(d-e) < p' < 3e, p' odd
            case_id = 5;
            p = 2 * d - pp - 1;
            closed = Rational((pp - 2 * e) % 2 == 0 ? 1 : -1) * Rational(d - 2 * e) *
                     Rational(pp + 3) /
                     (rfact(pp - 2 * e + 1) * rfact(3 * e - pp) * rfact(pp - 2 * (d - e) + 1) *
                      rfact(3 * (d - e) - pp));
            claim = {pp - 2 * e, pp - 2 * e + 1};
        } else { // p' = 3e odd
            case_id = 6;
            p = 2 * d - pp - 1;
            closed = Rational(-1) / (rfact(e) * rfact(5 * e - 2 * d + 1) *
                                     rfact(3 * d - 6 * e - 1));
            claim = {e, e};
        }
    } else {
        if (pp <= r * e) {
            case_id = 7;
            p = pp;
            closed = Rational(1) /
                     (rfact(e) * rfact(r * (d - e) - pp) * rfact(r * e - pp) * rfact(d - e));
            claim = {0, 0};
        } else if (pp <= std::min(r * (d - e), (r + 1) * e)) {
            case_id = 8;
            p = r * e;
            closed = Rational((pp - r * e) % 2 == 0 ? 1 : -1) /
                     (rfact(pp - r * e) * rfact((r + 1) * e - pp) * rfact(r * (d - e) - pp) *
                      rfact(d - e));
            claim = {pp - r * e, pp - r * e};
        } else { // r(d-e) < p' <= (r+1)e
            case_id = 9;
            p = r * d - pp;
            closed = Rational((pp - r * e) % 2 == 0 ? 1 : -1) /
                     (rfact(pp - r * e) * rfact((r + 1) * e - pp) * rfact(pp - r * (d - e)) *
                      rfact((r + 1) * (d - e) - pp));
            claim = {pp - r * e, pp - r * e};
        }
    }

    if (case_id == 0 || !in_a_set(p, e, r))
        throw std::domain_error("choose_p: no case covers " + tuple_str(d, e, r, pprime));
    if (r == 2 && p % 2 != 0)
        throw std::logic_error("choose_p: odd p chosen at r=2 for " + tuple_str(d, e, r, pprime));

    EParams params{d, e, r, p, pp};
    Rational s = s_sum(emap_spec(params));
    LHBounds bounds = lh_bounds(params);
    if (s != closed)
        throw std::logic_error("choose_p: case " + std::to_string(case_id) +
                               " closed form mismatch at " + tuple_str(d, e, r, pprime));
    if (!(bounds == claim))
        throw std::logic_error("choose_p: case " + std::to_string(case_id) +
                               " L/H mismatch at " + tuple_str(d, e, r, pprime));
    if (s.is_zero())
        throw std::domain_error("choose_p: S vanishes at " + tuple_str(d, e, r, pprime));
    return CaseResult{case_id, p, s, bounds};
}

std::vector<CaseRow> verify_cases(int d_max, int r_max) {
    if (d_max < 3 || r_max < 3)
        throw std::invalid_argument("verify_cases: need d_max >= 3 and r_max >= 3");
    std::vector<CaseRow> rows;
    for (int d = 3; d <= d_max; ++d)
        for (int e = 1; 2 * e < d; ++e)
            for (int r = 2; r <= r_max; ++r)
                for (int pp : a_set(e, r + 1)) {
                    try {
                        CaseRow row{d, e, r, pp, choose_p(d, e, r, pp)};
                        if (d <= 4 && r <= 3) { // re-derive the small ones from scratch
                            EParams params{d, e, r, row.result.p, pp};
                            if (e_bruteforce(params).is_zero())
                                throw std::logic_error("integrand vanishes");
                        }
                        rows.push_back(std::move(row));
                    } catch (const std::exception& ex) {
                        throw std::runtime_error("verify_cases failed at " +
                                                 tuple_str(d, e, r, pp) + ": " + ex.what());
                    }
                }
    return rows;
}

BinaryForm u_map(const BinaryForm& A, const BinaryForm& B, const EParams& params) {
    params.validate();
    int d = params.d, e = params.e, r = params.r, p = params.p, pp = params.pprime;
    if (A.degree() != r * d - 2 * p)
        throw std::invalid_argument("u_map: deg A must be rd - 2p");
    if (B.degree() != d) throw std::invalid_argument("u_map: deg B must be d");

    int dl = r * (d - e), dm = r * e;
    auto lx = merge_vars({VarSet{"l", dl + 1}}, {VarSet{"x", 2}});
    MultiPoly lambda(lx);
    for (int i = 0; i <= dl; ++i) {
        std::vector<int> exp(static_cast<size_t>(lambda.ncomp()), 0);
        exp[static_cast<size_t>(lambda.comp_index("l", i))] = 1;
        exp[static_cast<size_t>(lambda.comp_index("x", 0))] = dl - i;
        exp[static_cast<size_t>(lambda.comp_index("x", 1))] = i;
        lambda.add_term(std::move(exp), Rational(binomial(dl, i)));
    }
    auto mx = merge_vars({VarSet{"m", dm + 1}}, {VarSet{"x", 2}});
    MultiPoly mu(mx);
    for (int j = 0; j <= dm; ++j) {
        std::vector<int> exp(static_cast<size_t>(mu.ncomp()), 0);
        exp[static_cast<size_t>(mu.comp_index("m", j))] = 1;
        exp[static_cast<size_t>(mu.comp_index("x", 0))] = dm - j;
        exp[static_cast<size_t>(mu.comp_index("x", 1))] = j;
        mu.add_term(std::move(exp), Rational(binomial(dm, j)));
    }

    MultiPoly t1 = transvectant(lambda, mu, p, "x");
    MultiPoly t2 = transvectant(A.to_poly("x"), t1, r * d - 2 * p, "x");

    std::vector<MultiPoly> lvals, mvals;
    MultiPoly xpoly(std::vector<VarSet>{VarSet{"x", 2}});
    for (int i = 0; i <= dl; ++i) {
        MultiPoly v(xpoly.vars());
        v.add_term({i, dl - i}, Rational(i % 2 == 0 ? 1 : -1)); // x1^(dl-i) (-x0)^i
        lvals.push_back(std::move(v));
    }
    MultiPoly ypoly(std::vector<VarSet>{VarSet{"y", 2}});
    for (int j = 0; j <= dm; ++j) {
        MultiPoly v(ypoly.vars());
        v.add_term({j, dm - j}, Rational(j % 2 == 0 ? 1 : -1)); // y1^(dm-j) (-y0)^j
        mvals.push_back(std::move(v));
    }
    MultiPoly t3 = subst_components(subst_components(t2, "l", lvals), "m", mvals);

    MultiPoly t4 = polarize(B, e, "y", "x");
    MultiPoly t6 = omega_power(t3 * t4, "x", "y", pp);
    return BinaryForm::from_poly(identify(t6, "y", "x"), "x");
}

} // namespace omegacalc

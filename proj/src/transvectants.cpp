#include "omegacalc/transvectants.hpp"

#include "omegacalc/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegacalc {

void MonomialSpec::validate() const {
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0 || k < 0)
        throw std::invalid_argument("MonomialSpec: negative entry");
    if (k > std::min(a1 + a2, b1 + b2))
        throw std::invalid_argument("MonomialSpec: k exceeds min(a1+a2, b1+b2)");
}

MultiPoly transvectant(const MultiPoly& A, const MultiPoly& B, int k,
                       const std::string& x) {
    if (k < 0) throw std::domain_error("transvectant: negative k");
    if (A.is_zero() || B.is_zero()) {
        MultiPoly zero(merge_vars(A.vars(), B.vars()));
        return zero;
    }
    if (!A.is_homogeneous_in(x) || !B.is_homogeneous_in(x))
        throw std::invalid_argument("transvectant: arguments not homogeneous in " + x);
    int m = A.degree_in(x);
    int n = B.degree_in(x);
    if (k > std::min(m, n))
        throw std::domain_error("transvectant: k exceeds min degree");

    Rational pref = rfact(m - k) * rfact(n - k) / (rfact(m) * rfact(n));
    MultiPoly sum(merge_vars(A.vars(), B.vars()));
    for (int i = 0; i <= k; ++i) {
        MultiPoly dA = differentiate(differentiate(A, x, 0, k - i), x, 1, i);
        MultiPoly dB = differentiate(differentiate(B, x, 0, i), x, 1, k - i);
        MultiPoly piece = dA * dB;
        if (i % 2 == 1) piece = -piece;
        sum += piece * Rational(binomial(k, i));
    }
    return sum * pref;
}

BinaryForm transvectant(const BinaryForm& A, const BinaryForm& B, int k) {
    if (k < 0 || k > std::min(A.degree(), B.degree()))
        throw std::domain_error("transvectant: k out of range");
    int dout = A.degree() + B.degree() - 2 * k;
    if (A.is_zero() || B.is_zero()) return BinaryForm(dout);
    MultiPoly r = transvectant(A.to_poly("x"), B.to_poly("x"), k, "x");
    if (r.is_zero()) return BinaryForm(dout);
    return BinaryForm::from_poly(r, "x");
}

Rational s_sum(const MonomialSpec& spec) {
    spec.validate();
    int lo = std::max({0, spec.k - spec.a2, spec.k - spec.b1});
    int hi = std::min({spec.k, spec.a1, spec.b2});
    Rational total(0);
    for (int i = lo; i <= hi; ++i) {
        Rational term =
            Rational(1) / (rfact(i) * rfact(spec.k - i) * rfact(spec.a1 - i) *
                           rfact(spec.b2 - i) * rfact(spec.a2 - spec.k + i) *
                           rfact(spec.b1 - spec.k + i));
        if (i % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

Rational n_coeff(const MonomialSpec& spec) {
    spec.validate();
    Rational s = s_sum(spec);
    if (s.is_zero()) return s;
    Rational f = rfact(spec.a1 + spec.a2 - spec.k) * rfact(spec.b1 + spec.b2 - spec.k) *
                 rfact(spec.k) * rfact(spec.a1) * rfact(spec.a2) * rfact(spec.b1) *
                 rfact(spec.b2) /
                 (rfact(spec.a1 + spec.a2) * rfact(spec.b1 + spec.b2));
    if (spec.k % 2 == 1) f = -f;
    return s * f;
}

MultiPoly bracket_monomial(const MonomialSpec& spec, const std::string& a,
                           const std::string& b, const std::string& x) {
    spec.validate();
    int ea = spec.a1 + spec.b1 - spec.k;
    int eb = spec.a2 + spec.b2 - spec.k;
    if (ea < 0 || eb < 0)
        throw std::invalid_argument("bracket_monomial: negative exponent (N vanishes here)");
    std::vector<VarSet> vars =
        merge_vars({VarSet{a, 2}, VarSet{b, 2}}, {VarSet{x, 2}});
    MultiPoly ab = bracket2(vars, a, b);
    MultiPoly ax = pairing(vars, a, x);
    MultiPoly bx = pairing(vars, b, x);
    return ab.pow(spec.k) * ax.pow(ea) * bx.pow(eb);
}

MultiPoly u_bracket(const MonomialSpec& spec, const std::string& a,
                    const std::string& b, const std::string& x) {
    spec.validate();
    const std::string u = "u", v = "v";
    std::vector<VarSet> vars = merge_vars(
        merge_vars({VarSet{a, 2}, VarSet{b, 2}}, {VarSet{x, 2}}),
        {VarSet{u, 2}, VarSet{v, 2}});
    MultiPoly base = bracket2(vars, u, v).pow(spec.k) *
                     pairing(vars, u, x).pow(spec.a1 + spec.a2 - spec.k) *
                     pairing(vars, v, x).pow(spec.b1 + spec.b2 - spec.k);
    MultiPoly r = dir_partial(base, a, u, spec.a1);
    r = dir_partial(r, b, u, spec.a2);
    r = dir_partial(r, a, v, spec.b1);
    r = dir_partial(r, b, v, spec.b2);
    return r.dropped(u).dropped(v);
}

namespace {

// twice-values -> plain nonnegative integer, or report failure
bool half_of(int two, int& out) {
    if (two < 0 || two % 2 != 0) return false;
    out = two / 2;
    return true;
}

} // namespace

SignedSquare clebsch_gordan(const AngularData& ad) {
    const SignedSquare zero{0, Rational(0)};
    // parity: each 2j_i and 2m_i must agree mod 2
    if (((ad.twoJ1 ^ ad.twoM1) & 1) || ((ad.twoJ2 ^ ad.twoM2) & 1) ||
        ((ad.twoJ ^ ad.twoM) & 1))
        return zero;
    if (ad.twoM1 + ad.twoM2 != ad.twoM) return zero;

    // recover the monomial-spec data: a1 = j1-m1, a2 = j1+m1, etc.
    int a1, a2, b1, b2, k;
    if (!half_of(ad.twoJ1 - ad.twoM1, a1) || !half_of(ad.twoJ1 + ad.twoM1, a2) ||
        !half_of(ad.twoJ2 - ad.twoM2, b1) || !half_of(ad.twoJ2 + ad.twoM2, b2) ||
        !half_of(ad.twoJ1 + ad.twoJ2 - ad.twoJ, k))
        return zero;
    if (k > std::min(a1 + a2, b1 + b2)) return zero; // triangle: j >= |j1-j2|
    if (a1 + b1 < k || a2 + b2 < k) return zero;     // |m| <= j

    MonomialSpec spec{a1, a2, b1, b2, k};
    Rational n = n_coeff(spec);
    if (n.is_zero()) return zero;

    // C = N * (-1)^k sqrt(2j+1) (a1+a2)!(b1+b2)!
    //       * sqrt[ (a1+b1-k)!(a2+b2-k)! /
    //               ((a1+a2+b1+b2-k+1)!(a1+a2-k)!(b1+b2-k)!k!a1!a2!b1!b2!) ]
    Rational rat = n * rfact(a1 + a2) * rfact(b1 + b2);
    if (k % 2 == 1) rat = -rat;
    Rational radicand = Rational(ad.twoJ + 1) * rfact(a1 + b1 - k) *
                        rfact(a2 + b2 - k) /
                        (rfact(a1 + a2 + b1 + b2 - k + 1) * rfact(a1 + a2 - k) *
                         rfact(b1 + b2 - k) * rfact(k) * rfact(a1) * rfact(a2) *
                         rfact(b1) * rfact(b2));
    SignedSquare out;
    out.sign = rat.sign();
    out.square = rat * rat * radicand;
    return out;
}

SignedSquare wigner_3j(const AngularData& ad) {
    SignedSquare c = clebsch_gordan(ad);
    if (c.is_zero()) return c;
    c.square /= Rational(ad.twoJ + 1);
    // phase (-1)^{j1-j2+m}; the exponent is an integer whenever C != 0
    int e = (ad.twoJ1 - ad.twoJ2 + ad.twoM) / 2;
    if (((e % 2) + 2) % 2 == 1) c.sign = -c.sign;
    return c;
}

} // namespace omegacalc

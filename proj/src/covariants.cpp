#include "omegacalc/covariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace omegacalc {

BinaryForm hessian(const BinaryForm& A) {
    int d = A.degree();
    if (d <= 1) return BinaryForm(std::max(2 * d - 4, 0));
    return A.diff(2, 0) * A.diff(0, 2) - A.diff(1, 1) * A.diff(1, 1);
}

namespace {

// Dense univariate polynomials over Q, coefficients ascending in degree.
// A binary form sum c_i x0^{n-i} x1^i dehomogenizes to sum c_i t^i; the
// multiplicity of x0 reappears as the degree deficit n - deg.
using UPoly = std::vector<Rational>;

void ustrip(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero

// remainder of a by b (b nonzero)
UPoly umod(UPoly a, const UPoly& b) {
    while (udeg(a) >= udeg(b)) {
        Rational f = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        for (int i = 0; i <= udeg(b); ++i)
            a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
        a.pop_back(); // leading term cancels exactly
        ustrip(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    ustrip(a);
    ustrip(b);
    while (!b.empty()) {
        UPoly r = umod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    // monic so the result is canonical
    if (!a.empty())
        for (auto& c : a) c /= a.back();
    return a;
}

} // namespace

BinaryForm repeated_part(const BinaryForm& F) {
    if (F.is_zero() || F.degree() == 0)
        throw std::invalid_argument("repeated_part: form must be nonconstant");
    if (hessian(F).is_zero())
        throw std::invalid_argument(
            "repeated_part: power of a linear form (both partials share it entirely)");
    BinaryForm G0 = F.dx0(), G1 = F.dx1();

    auto dehom = [](const BinaryForm& g, int& x0mult) {
        UPoly p;
        for (int i = 0; i <= g.degree(); ++i) p.push_back(g.coeff(i));
        ustrip(p);
        x0mult = g.degree() - udeg(p);
        return p;
    };
    int u0 = 0, u1 = 0;
    UPoly p0 = dehom(G0, u0), p1 = dehom(G1, u1);
    UPoly g = ugcd(p0, p1);
    int x0mult = std::min(u0, u1);

    int outdeg = udeg(g) + x0mult;
    BinaryForm out(outdeg);
    for (int i = 0; i <= udeg(g); ++i) out.set_coeff(i, g[static_cast<size_t>(i)]);
    // monic in the graded-lex leading term = the lowest-index nonzero coeff
    for (int i = 0; i <= outdeg; ++i)
        if (!out.coeff(i).is_zero()) {
            Rational lead = out.coeff(i);
            for (int j = i; j <= outdeg; ++j) out.set_coeff(j, out.coeff(j) / lead);
            break;
        }
    return out;
}

namespace {

BinaryForm det3(const std::array<std::array<BinaryForm, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

BinaryForm wronskian_D(const BinaryForm& F) {
    int d = F.degree();
    if (d < 3) throw std::domain_error("wronskian_D: need deg F >= 3");
    std::array<BinaryForm, 4> rows{
        BinaryForm::monomial(1, 0) * F.dx0(), BinaryForm::monomial(1, 0) * F.dx1(),
        BinaryForm::monomial(1, 1) * F.dx0(), BinaryForm::monomial(1, 1) * F.dx1()};
    std::array<std::array<BinaryForm, 4>, 4> m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            rows[static_cast<size_t>(r)].diff(3 - c, c);
    // Laplace expansion along the first row
    BinaryForm det(4 * d - 12);
    for (int c = 0; c < 4; ++c) {
        std::array<std::array<BinaryForm, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < 4; ++c2) {
                if (c2 == c) continue;
                minor[static_cast<size_t>(r - 1)][static_cast<size_t>(cc++)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(c2)];
            }
        }
        BinaryForm term = m[0][static_cast<size_t>(c)] * det3(minor);
        det = det + (c % 2 ? -term : term);
    }
    return det;
}

BinaryForm compound_D(const BinaryForm& F) {
    int d = F.degree();
    if (d < 3) throw std::domain_error("compound_D: need deg F >= 3");
    BinaryForm F2 = F * F;
    BinaryForm t66 = transvectant(F2, F2, 6);
    if (d == 3) return t66;
    BinaryForm t24 = transvectant(F2, transvectant(F, F, 2), 4);
    if (d == 4) return Rational(7) * t66 - Rational(5) * t24;
    if (d == 5) return Rational(129) * t66 - Rational(250) * t24;
    BinaryForm t42 = transvectant(F2, transvectant(F, F, 4), 2);
    Rational xi1 = Rational((2 * d - 1) * (2 * d - 3)) * Rational(2 * d - 5).pow(3);
    Rational xi2 = Rational(-9 * (d - 3) * (2 * d - 7) * (2 * d - 5)) *
                   Rational(2 * d - 3).pow(2);
    Rational xi3 = Rational(4 * (d - 1) * (d - 3)) *
                   Rational((d - 4) * (2 * d - 9) * (4 * d - 7));
    return xi1 * t66 + xi2 * t24 + xi3 * t42;
}

namespace {

struct ZCoeffs {
    Rational z1, z2, z3;
};

ZCoeffs z_coeffs(int p, int q) {
    Rational rp(p), rq(q);
    ZCoeffs z;
    z.z1 = rp * rp * Rational(p - 1) * Rational(2 * p - 2 * q - 1) * Rational(p - q - 1) /
           Rational(2 * (2 * p - 1));
    z.z2 = -rq * rq * Rational(q - 1) * Rational(2 * p - 2 * q + 1) * Rational(p - q - 1) /
           Rational(2 * (2 * q - 1));
    z.z3 = rp * rq * Rational(p - q - 1);
    return z;
}

} // namespace

BinaryForm j_quotient(const BinaryForm& P, const BinaryForm& Q) {
    int p = P.degree(), q = Q.degree();
    ZCoeffs z = z_coeffs(p, q);
    BinaryForm out(std::max(2 * p + 2 * q - 4, 0));
    // each z vanishes exactly when its transvectant would be ill-formed
    if (!z.z1.is_zero()) out = out + z.z1 * (Q * Q * transvectant(P, P, 2));
    if (!z.z2.is_zero()) out = out + z.z2 * (P * P * transvectant(Q, Q, 2));
    if (!z.z3.is_zero()) out = out + z.z3 * transvectant(P * P, Q * Q, 2);
    return out;
}

MultiPoly j_quotient(const MultiPoly& P, const MultiPoly& Q, const std::string& x) {
    if (!P.is_homogeneous_in(x) || !Q.is_homogeneous_in(x))
        throw std::invalid_argument("j_quotient: arguments not homogeneous in " + x);
    if (P.is_zero() || Q.is_zero()) return MultiPoly(merge_vars(P.vars(), Q.vars()));
    int p = P.degree_in(x), q = Q.degree_in(x);
    ZCoeffs z = z_coeffs(p, q);
    MultiPoly out(merge_vars(P.vars(), Q.vars()));
    if (!z.z1.is_zero()) out += z.z1 * (Q * Q * transvectant(P, P, 2, x));
    if (!z.z2.is_zero()) out += z.z2 * (P * P * transvectant(Q, Q, 2, x));
    if (!z.z3.is_zero()) out += z.z3 * transvectant(P * P, Q * Q, 2, x);
    return out;
}

BinaryForm c_e(const BinaryForm& F, int e) {
    int d = F.degree();
    if (e < 1 || 2 * e > d) throw std::domain_error("c_e: need 1 <= e <= d/2");
    BinaryForm he = hessian(F);
    if (he.is_zero())
        throw std::invalid_argument(
            "c_e: He(F) = 0 (power of a linear form); use membership() instead");
    return j_quotient(F.pow(2 * d - 2 * e - 2), he.pow(d - e));
}

MembershipReport membership(const BinaryForm& F, int e) {
    int d = F.degree();
    if (F.is_zero()) throw std::invalid_argument("membership: zero form");
    if (d < 3) throw std::domain_error("membership: need deg F >= 3");
    if (e < 1 || 2 * e > d) throw std::domain_error("membership: need 1 <= e <= d/2");

    MembershipReport rep;
    rep.he = hessian(F);
    rep.wronskian = wronskian_D(F);
    rep.in_Y = rep.wronskian.is_zero();
    if (rep.he.is_zero()) {
        // d-th power of a linear form: lies in the closure of every X_e
        rep.is_power_of_linear = true;
        rep.in_Y = true;
        rep.in_X_e = true;
        int p = d * (2 * d - 2 * e - 2), q = (2 * d - 4) * (d - e);
        rep.ce = BinaryForm(std::max(2 * p + 2 * q - 4, 0));
    } else {
        rep.ce = c_e(F, e);
        rep.in_X_e = rep.in_Y && rep.ce.is_zero();
    }
    return rep;
}

bool TransvectantWord::valid_for(int d) const {
    if (i < 0 || j < 0 || k < 0) return false;
    if (2 * i > d) return false;
    if (j > std::min(2 * d - 4 * i, d)) return false;
    if (k > std::min(3 * d - 4 * i - 2 * j, d)) return false;
    return true;
}

std::vector<TransvectantWord> valid_words(int d) {
    std::vector<TransvectantWord> out;
    for (int i = 0; 2 * i <= d; ++i)
        for (int j = 0; j <= std::min(2 * d - 4 * i, d); ++j)
            for (int k = 0; k <= std::min(3 * d - 4 * i - 2 * j, d); ++k)
                out.push_back({i, j, k});
    return out;
}

BinaryForm e_cov(const BinaryForm& F, const TransvectantWord& I) {
    if (!I.valid_for(F.degree()))
        throw std::invalid_argument("e_cov: word (i,j,k) invalid for this degree");
    BinaryForm t = transvectant(F, F, 2 * I.i);
    t = transvectant(t, F, I.j);
    return transvectant(t, F, I.k);
}

Rational omega_I(int d, int e, const TransvectantWord& I) {
    if (!I.valid_for(d)) throw std::invalid_argument("omega_I: invalid word");
    if (e < 0 || 2 * e > d) throw std::domain_error("omega_I: need 0 <= e <= d/2");
    // Each factor's spec is well-formed whenever the previous factors are
    // nonzero (a nonzero N forces the next monomial's exponents nonnegative);
    // a zero factor short-circuits the product.
    Rational n1 = n_coeff({d - e, e, d - e, e, 2 * I.i});
    if (n1.is_zero()) return n1;
    Rational n2 = n_coeff({2 * (d - e) - 2 * I.i, 2 * e - 2 * I.i, d - e, e, I.j});
    if (n2.is_zero()) return n2;
    int s = 2 * I.i + I.j;
    Rational n3 = n_coeff({3 * (d - e) - s, 3 * e - s, d - e, e, I.k});
    return n1 * n2 * n3;
}

BinaryForm psi(const BinaryForm& F, const TransvectantWord& I, const TransvectantWord& Ip,
               int e) {
    if (I.weight() != Ip.weight())
        throw std::invalid_argument("psi: words must have equal weight 2i+j+k");
    int d = F.degree();
    Rational wI = omega_I(d, e, I);
    Rational wIp = omega_I(d, e, Ip);
    return wI * e_cov(F, Ip) - wIp * e_cov(F, I);
}

} // namespace omegacalc

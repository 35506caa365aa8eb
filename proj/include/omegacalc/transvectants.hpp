#pragma once

#include "omegacalc/multipoly.hpp"

#include <string>

namespace omegacalc {

// Parameters of a monomial transvectant (L1^a1 L2^a2, L1^b1 L2^b2)_k.
struct MonomialSpec {
    int a1 = 0;
    int a2 = 0;
    int b1 = 0;
    int b2 = 0;
    int k = 0;

    // all entries nonnegative and k <= min(a1+a2, b1+b2)
    void validate() const;
};

// k-th transvectant with the (m-k)!(n-k)!/(m!n!) normalization.
BinaryForm transvectant(const BinaryForm& A, const BinaryForm& B, int k);

// Same formula for multivariate polynomials homogeneous in the binary
// varset `x`; any other varsets ride along as inert coefficients.
MultiPoly transvectant(const MultiPoly& A, const MultiPoly& B, int k,
                       const std::string& x = "x");

// Alternating sum S[spec]; empty index range gives 0.
Rational s_sum(const MonomialSpec& spec);

// N[spec] = S[spec] * (-1)^k (a1+a2-k)!(b1+b2-k)! k! a1!a2!b1!b2!
//                    / ((a1+a2)!(b1+b2)!),
// the coefficient in
//   (L1^a1 L2^a2, L1^b1 L2^b2)_k = N * (ab)^k a_x^{a1+b1-k} b_x^{a2+b2-k}
// where L1 = a_x, L2 = b_x.
Rational n_coeff(const MonomialSpec& spec);

// The right-hand-side monomial (ab)^k a_x^{a1+b1-k} b_x^{a2+b2-k} in the
// symbolic letters a, b.  Requires both exponents nonnegative (always the
// case when N[spec] != 0).
MultiPoly bracket_monomial(const MonomialSpec& spec, const std::string& a = "a",
                           const std::string& b = "b", const std::string& x = "x");

// U[spec](a,b,x) = {a.du}^a1 {b.du}^a2 {a.dv}^b1 {b.dv}^b2
//                    (uv)^k u_x^{a1+a2-k} v_x^{b1+b2-k},
// computed by literal operator application over auxiliary variables u, v
// (which are fully consumed).  Equals (a1+a2)!(b1+b2)! times the monomial
// transvectant (a_x^a1 b_x^a2, a_x^b1 b_x^b2)_k.
MultiPoly u_bracket(const MonomialSpec& spec, const std::string& a = "a",
                    const std::string& b = "b", const std::string& x = "x");

// Angular momenta stored as doubled integers so half-integer spins stay exact.
struct AngularData {
    int twoJ1 = 0;
    int twoJ2 = 0;
    int twoJ = 0;
    int twoM1 = 0;
    int twoM2 = 0;
    int twoM = 0;
};

// Exact representation of sign * sqrt(square).
struct SignedSquare {
    int sign = 0;          // -1, 0, +1
    Rational square;       // nonnegative; zero iff sign == 0

    bool is_zero() const { return sign == 0; }
    bool operator==(const SignedSquare& o) const {
        return sign == o.sign && square == o.square;
    }
};

// Clebsch-Gordan coefficient C^{j1,j2,j}_{m1,m2,m}.  Out-of-domain data
// (triangle or parity violations, m != m1+m2, |m_i| > j_i) gives exact zero.
SignedSquare clebsch_gordan(const AngularData& ad);

// Wigner 3j-symbol (j1 j2 j; m1 m2 -m) = (-1)^{j1-j2+m} (2j+1)^{-1/2} C.
SignedSquare wigner_3j(const AngularData& ad);

} // namespace omegacalc

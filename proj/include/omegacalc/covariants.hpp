#pragma once

#include "omegacalc/multipoly.hpp"
#include "omegacalc/transvectants.hpp"

#include <vector>

namespace omegacalc {

// He(A) = A_{x0x0} A_{x1x1} - A_{x0x1}^2, degree 2d-4 (zero form of formal
// degree max(2d-4, 0) when deg A <= 1).
BinaryForm hessian(const BinaryForm& A);

// gcd(F_x0, F_x1): for F = prod l_i^{a_i} with pairwise non-proportional
// l_i this equals prod l_i^{a_i - 1}. Normalized monic in the graded-lex
// leading term. F zero, constant, or a power of a linear form -> error.
BinaryForm repeated_part(const BinaryForm& F);

// Wronskian determinant D(F): 4x4 determinant of the third-order partials
// of {x0 F_x0, x0 F_x1, x1 F_x0, x1 F_x1}; degree 4 in the coefficients,
// order 4d-12. Vanishes exactly on forms with at most two distinct roots.
BinaryForm wronskian_D(const BinaryForm& F);

// The same covariant up to a d-dependent scalar, assembled from compound
// transvectants:
//   d=3: (F^2,F^2)_6
//   d=4: 7 (F^2,F^2)_6 - 5 (F^2,(F,F)_2)_4
//   d=5: 129 (F^2,F^2)_6 - 250 (F^2,(F,F)_2)_4
//   d>=6: xi1 (F^2,F^2)_6 + xi2 (F^2,(F,F)_2)_4 + xi3 (F^2,(F,F)_4)_2
// with xi1 = (2d-1)(2d-3)(2d-5)^3, xi2 = -9(d-3)(2d-5)(2d-7)(2d-3)^2,
// xi3 = 4(d-1)(d-3)(d-4)(2d-9)(4d-7).
BinaryForm compound_D(const BinaryForm& F);

// Numerator of the Hessian of the quotient P/Q:
//   J(P,Q) = z1 Q^2 (P,P)_2 + z2 P^2 (Q,Q)_2 + z3 (P^2,Q^2)_2,
//   z1 = p^2(p-1)(2p-2q-1)(p-q-1) / (2(2p-1)),
//   z2 = q^2(q-1)(2p-2q+1)(p-q-1) / (2(2q-1)),
//   z3 = pq(p-q-1),
// satisfying Q^4 He(P/Q) = J(P,Q). Order 2p+2q-4.
BinaryForm j_quotient(const BinaryForm& P, const BinaryForm& Q);

// Same formula over polynomials homogeneous in the binary varset `x` whose
// coefficients may involve other (inert) varsets, enabling fully symbolic
// identity checks with generic coefficients.
MultiPoly j_quotient(const MultiPoly& P, const MultiPoly& Q, const std::string& x = "x");

// C_e(F) = J(F^{2d-2e-2}, He(F)^{d-e}).  Requires 1 <= e <= d/2 and
// He(F) != 0 (for powers of linear forms use membership()).
BinaryForm c_e(const BinaryForm& F, int e);

// Exact classification of F against the coincident-root loci:
//   Y     = forms with at most two distinct linear factors      (D = 0)
//   X_e   = forms L1^{d-e} L2^e                                 (D = C_e = 0)
struct MembershipReport {
    bool is_power_of_linear = false;
    bool in_Y = false;
    bool in_X_e = false;
    BinaryForm he;
    BinaryForm wronskian;
    BinaryForm ce; // zero by convention when He(F) = 0 (c_e itself refuses)
};

// Requires F nonzero, deg F >= 3, 1 <= e <= d/2.
MembershipReport membership(const BinaryForm& F, int e);

// The triple I = (i,j,k) indexing the iterated transvectant
// (((F,F)_{2i}, F)_j, F)_k.
struct TransvectantWord {
    int i = 0;
    int j = 0;
    int k = 0;

    int weight() const { return 2 * i + j + k; }
    bool valid_for(int d) const;
    friend bool operator==(const TransvectantWord&, const TransvectantWord&) = default;
};

// All words valid for degree d, ordered lexicographically in (i,j,k).
std::vector<TransvectantWord> valid_words(int d);

// E_I(F) = (((F,F)_{2i}, F)_j, F)_k; order 4d - 2(2i+j+k).
BinaryForm e_cov(const BinaryForm& F, const TransvectantWord& I);

// The rational number with E_I(x0^{d-e} x1^e) = omega_I x0^{4(d-e)-s} x1^{4e-s},
// s = 2i+j+k: the product of three monomial transvectant coefficients
//   N[d-e,e; d-e,e; 2i] N[2(d-e)-2i,2e-2i; d-e,e; j]
//   N[3(d-e)-(2i+j),3e-(2i+j); d-e,e; k].
Rational omega_I(int d, int e, const TransvectantWord& I);

// Psi_{I,I'}(F) = omega_I E_{I'}(F) - omega_{I'} E_I(F); requires equal
// weights 2i+j+k = 2i'+j'+k'. These vanish identically on X_e.
BinaryForm psi(const BinaryForm& F, const TransvectantWord& I, const TransvectantWord& Ip,
               int e);

} // namespace omegacalc

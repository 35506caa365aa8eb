#pragma once

#include "omegacalc/characters.hpp"
#include "omegacalc/transvectants.hpp"

#include <string>
#include <vector>

namespace omegacalc {

// Parameters of the integrand E(r; p, p') for binary d-ics split as (d-e, e).
struct EParams {
    int d = 0, e = 0, r = 0, p = 0, pprime = 0;
    void validate() const; // throws std::invalid_argument on any broken invariant
};

struct LHBounds {
    int L = 0, H = 0;
    bool empty() const { return L > H; }
    friend bool operator==(const LHBounds&, const LHBounds&) = default;
};

struct CaseResult {
    int case_id = 0; // 1..9
    int p = 0;       // the chosen second exponent
    Rational s_value;
    LHBounds bounds;
};

// the bracket data induced by the parameters:
// [r(d-e)-p, d-e; re-p, e; p'-p]
MonomialSpec emap_spec(const EParams& params);

// E by literal operator application:
// { Omega_{xy}^{p'} (x y)^p a_x^{r(d-e)-p} b_x^{d-e} a_y^{re-p} b_y^e }|_{y:=x}
MultiPoly e_bruteforce(const EParams& params, const std::string& a = "a",
                       const std::string& b = "b", const std::string& x = "x");

// E via the closed form: vanishes unless p <= p'; otherwise
// u_bracket(emap_spec) times the factorial ratio
//   p'! ((r+1)d-p'+1)! / [ (p'-p)! ((r+1)(d-e)-p')! ((r+1)e-p')!
//                          ((r+1)d-p'-p+1)! ].
MultiPoly e_closedform(const EParams& params, const std::string& a = "a",
                       const std::string& b = "b", const std::string& x = "x");

// summation window of the scalar sum S behind E
LHBounds lh_bounds(const EParams& params);

// Pick p for the given (d, e, r, p') so that S has at most two terms and is
// provably nonzero; returns the case id, the chosen p, the exact S (verified
// against the case's closed form) and the window. Throws std::domain_error
// if the tuple falls outside all nine cases.
CaseResult choose_p(int d, int e, int r, int pprime);

struct CaseRow {
    int d = 0, e = 0, r = 0, pprime = 0;
    CaseResult result;
};

// Exhaustive sweep over 3 <= d <= d_max, 1 <= e < d/2, 2 <= r <= r_max,
// p' in A_{r+1}: every tuple must land in a case with S != 0.
// Throws std::runtime_error naming the first offending tuple.
std::vector<CaseRow> verify_cases(int d_max, int r_max);

// The step-by-step pipeline on concrete forms A (degree rd-2p) and
// B (degree d): generic forms Lambda, M; T1 = (Lambda, M)_p;
// T2 = (A, T1)_{rd-2p}; indeterminate substitution; partial polarization of B;
// Omega^{p'}; y := x. Exponentially heavier than e_bruteforce (exercised at
// d <= 4); linked to the integrand by
//   u_map(A, B) = (-1)^{rd} d!/(d-e)! * int_A da int_B db E(r; p, p').
BinaryForm u_map(const BinaryForm& A, const BinaryForm& B, const EParams& params);

} // namespace omegacalc

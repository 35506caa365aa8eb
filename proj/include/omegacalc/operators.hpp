#pragma once

#include "omegacalc/multipoly.hpp"

namespace omegacalc {

// Iterated exact partial derivative d^order/d(name<comp>)^order.
MultiPoly differentiate(const MultiPoly& p, const std::string& name, int comp, int order);

// (sum_i coef_i d/d diff_i)^n applied to p; coef and diff must be varsets of
// equal arity. This is the polarization workhorse: polarize = dir_partial
// with coef=y, diff=x, and the bracket operators {a d_u} of the U-calculus.
MultiPoly dir_partial(const MultiPoly& p, const std::string& coefset, const std::string& diffset,
                      int n);

// Cayley's Omega operator to the k-th power:
// (d^2/dx0 dy1 - d^2/dx1 dy0)^k, expanded binomially in one pass.
MultiPoly omega_power(const MultiPoly& p, const std::string& xset, const std::string& yset, int k);

// The substitution |_{from := to}: every from-component exponent is moved
// onto the matching to-component; the from varset disappears.
MultiPoly identify(const MultiPoly& p, const std::string& from, const std::string& to);

// Partial polarization (y0 d/dx0 + y1 d/dx1)^e B, bidegree (d-e, e) in (x, y).
MultiPoly polarize(const BinaryForm& B, int e, const std::string& yname = "y",
                   const std::string& xname = "x");

// The symbolic "integration" operator: (1/m!) op_form(d/dletter) target,
// where op_form is homogeneous of degree m in the letter's components and
// mentions nothing else. Applying to a target of letter-degree < m yields 0.
// If the result no longer involves the letter, its varset is dropped.
MultiPoly apply_letter(const MultiPoly& op_form, const std::string& letter,
                       const MultiPoly& target);

// Substitute polynomials for the components of a varset, which disappears.
MultiPoly subst_components(const MultiPoly& p, const std::string& name,
                           const std::vector<MultiPoly>& vals);

} // namespace omegacalc

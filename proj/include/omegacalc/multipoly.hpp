#pragma once

#include "omegacalc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace omegacalc {

// A named tuple of variables: VarSet{"x", 2} stands for (x0, x1),
// VarSet{"alpha", 3} for (alpha0, alpha1, alpha2).
struct VarSet {
    std::string name;
    int arity = 0;
    friend bool operator==(const VarSet&, const VarSet&) = default;
};

// Graded lexicographic order on exponent vectors: total degree first, then
// lex. Fixed globally so term maps (and therefore printed output) are
// canonical and reproducible byte-for-byte.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse exact polynomial over a declared, name-sorted list of VarSets.
// The exponent vector of a term spans the concatenated components of all
// varsets, in declaration order. Zero coefficients are never stored; the
// zero polynomial is the empty term map.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<VarSet> vars);
    MultiPoly(std::vector<VarSet> vars, TermMap terms);

    static MultiPoly constant(std::vector<VarSet> vars, const Rational& c);
    static MultiPoly variable(std::vector<VarSet> vars, const std::string& name, int comp);

    const std::vector<VarSet>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    int ncomp() const;
    // Index into vars() for a varset name, -1 if absent.
    int varset_index(const std::string& name) const;
    // Global component index of name<comp>; throws on unknown variable.
    int comp_index(const std::string& name, int comp) const;
    // First global component index of the named varset; throws if absent.
    int comp_offset(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    // Total degree; nullopt for the zero polynomial (deliberately not -1).
    std::optional<int> total_degree() const;
    // Max degree over the named varset's components (0 for zero poly or
    // unknown name).
    int degree_in(const std::string& name) const;
    bool is_homogeneous() const;
    bool is_homogeneous_in(const std::string& name) const;
    // True if some term has a positive exponent on one of name's components.
    bool mentions(const std::string& name) const;

    void add_term(std::vector<int> exp, const Rational& c);
    Rational coeff(const std::vector<int>& exp) const;

    // Re-express over a varset list that contains at least the mentioned
    // varsets of *this (arities must agree on shared names).
    MultiPoly with_vars(const std::vector<VarSet>& newvars) const;
    // Remove a varset no term mentions; throws if it is mentioned.
    MultiPoly dropped(const std::string& name) const;
    // Remove every varset no term mentions.
    MultiPoly pruned() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
    friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
    MultiPoly pow(int e) const;

    // Mathematical equality: both sides are remapped onto the merged varset
    // list, so declaring extra unused varsets never affects comparison.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    void check_exp(const std::vector<int>& exp) const;
    std::vector<VarSet> vars_;
    TermMap terms_;
};

// Union of two varset lists (sorted by name); throws on arity conflicts.
std::vector<VarSet> merge_vars(const std::vector<VarSet>& a, const std::vector<VarSet>& b);

// Symbol builders for the bracket calculus.
// pairing: a_x = sum_i a_i x_i (arities must match).
MultiPoly pairing(const std::vector<VarSet>& vars, const std::string& a, const std::string& x);
// bracket2: (a b) = a0 b1 - a1 b0 (both binary).
MultiPoly bracket2(const std::vector<VarSet>& vars, const std::string& a, const std::string& b);
// bracket3: (a b c) = det of the 3x3 matrix with rows a, b, c (all ternary).
// Generic binary form of the given degree with fully indeterminate
// coefficients: sum_i c_i x0^{degree-i} x1^i over the coefficient varset
// c of arity degree+1.
MultiPoly generic_form(int degree, const std::string& coefs, const std::string& x = "x");

MultiPoly bracket3(const std::vector<VarSet>& vars, const std::string& a, const std::string& b,
                   const std::string& c);

// Homogeneous binary form of degree d stored as the d+1 plain coefficients
// c_i of x0^(d-i) x1^i. The classical binomially-scaled coefficients are a
// view (scaled/from_scaled). A zero form still carries its formal degree so
// that degenerate covariants keep their expected degree bookkeeping;
// addition accepts a zero form of mismatched formal degree.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(int degree);
    BinaryForm(int degree, std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    const Rational& coeff(int i) const;
    void set_coeff(int i, const Rational& c);
    // alpha_i = c_i / C(d, i).
    Rational scaled(int i) const;
    static BinaryForm from_scaled(int degree, const std::vector<Rational>& alphas);
    static BinaryForm monomial(int degree, int i, const Rational& c = Rational(1));

    BinaryForm dx0() const;
    BinaryForm dx1() const;
    BinaryForm diff(int ord0, int ord1) const;

    Rational evaluate(const Rational& x0, const Rational& x1) const;
    // F(g00 x0 + g01 x1, g10 x0 + g11 x1)
    BinaryForm compose_linear(const Rational& g00, const Rational& g01, const Rational& g10,
                              const Rational& g11) const;

    MultiPoly to_poly(const std::string& var = "x") const;
    // Requires p homogeneous with every mentioned component inside the named
    // binary varset; the zero polynomial maps to the degree-0 zero form.
    static BinaryForm from_poly(const MultiPoly& p, const std::string& var = "x");

    BinaryForm operator-() const;
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& f);
    BinaryForm pow(int e) const;

    // Zero forms compare equal regardless of formal degree.
    friend bool operator==(const BinaryForm& a, const BinaryForm& b);
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_; // size degree+1
};

} // namespace omegacalc

#pragma once

#include "omegacalc/multipoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace omegacalc {

// Homogeneous form in three variables: exponent triples (i, j, k) with
// i + j + k = degree mapped to coefficients. Zero coefficients are erased;
// a zero form keeps its formal degree.
struct TernaryForm {
    int degree = 0;
    std::map<std::array<int, 3>, Rational> coeffs;

    TernaryForm() = default;
    explicit TernaryForm(int degree);

    void add_term(const std::array<int, 3>& exp, const Rational& c);
    Rational coeff(const std::array<int, 3>& exp) const;
    bool is_zero() const { return coeffs.empty(); }

    static TernaryForm monomial(const std::array<int, 3>& exp, const Rational& c = Rational(1));
    MultiPoly to_poly(const std::string& var = "x") const;
    // Requires p homogeneous and mentioning only the named ternary varset.
    static TernaryForm from_poly(const MultiPoly& p, const std::string& var = "x");

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
};

// Young tableau given by cell counts: rows[i][j] = how many cells of letter
// j sit in row i (2 or 3 rows; letters drawn from tableau_letters() in
// order). Semistandardness makes the actual filling unique, so the counts
// determine the tableau. A letter whose cells total less than `degree` is
// completed with trailing one-cell columns.
struct TableauSpec {
    std::vector<std::vector<int>> rows;
    int degree = 5;
};

// The letter names usable in tableaux: alpha, beta, ..., theta.
const std::vector<std::string>& tableau_letters();

// "5,3,4,4|0,2,1,1" -> rows of counts ('|' separates rows)
TableauSpec parse_tableau_spec(const std::string& text, int degree = 5);

// Product of full determinant brackets (l l' l''), contragredient brackets
// (l l' u) and linear factors l_x, as read off a tableau columnwise
// (height-3, height-2 and height-1 columns respectively).
struct BracketMonomial {
    std::vector<std::array<std::string, 3>> det_factors;
    std::vector<std::array<std::string, 2>> u_factors;
    std::vector<std::string> linear_factors;

    int order() const { return static_cast<int>(linear_factors.size()); }
    int cls() const { return static_cast<int>(u_factors.size()); }
    // occurrences of each letter across all factors
    std::map<std::string, int> letter_degrees() const;
    // rename letters (identity for letters absent from the map)
    BracketMonomial renamed(const std::map<std::string, std::string>& repl) const;
    // concatenation of factor lists; the caller keeps letter sets disjoint
    friend BracketMonomial operator*(BracketMonomial a, const BracketMonomial& b);
    std::string str() const;

    friend bool operator==(const BracketMonomial&, const BracketMonomial&) = default;
};

BracketMonomial parse_tableau(const TableauSpec& spec);

struct ConcomitantTerm {
    Rational coef;
    BracketMonomial mono;
};
using Concomitant = std::vector<ConcomitantTerm>;

// Contract every letter with its integration operator (1/d!) F(d/dletter).
// Letters are eliminated one at a time, cheapest pending expansion first, so
// intermediate polynomials stay small. Every letter must occur exactly
// F.degree times. The result is bihomogeneous in x and u of bidegree
// (order, class).
MultiPoly evaluate_monomial(const BracketMonomial& mono, const TernaryForm& F,
                            const std::string& x = "x", const std::string& u = "u");
MultiPoly evaluate_concomitant(const Concomitant& expr, const TernaryForm& F,
                               const std::string& x = "x", const std::string& u = "u");

// The seven degree-3 and four degree-4 concomitants whose joint vanishing
// cuts out the quintics that factor as a triple line times a double line.
std::vector<Concomitant> degree3_concomitants();
std::vector<Concomitant> degree4_concomitants();

struct QuinticReport {
    bool vanish_deg3 = false; // all seven degree-3 entries vanish on samples
    bool vanish_deg4 = false; // all four degree-4 entries vanish on samples
    bool independent = false; // the two basis concomitants are independent
    bool ratio_ok = false;    // solved coefficient ratio equals 50 : -19
    std::pair<Integer, Integer> ratio{0, 0};
    std::vector<std::string> failures;
    bool ok() const { return vanish_deg3 && vanish_deg4 && independent && ratio_ok; }
};

// Evaluate both generator lists on `trials` random triple-line-double-line
// quintics, check the basis pair is independent on x0^5 - x1^5, and re-solve
// the coefficient ratio from the evaluation on x0^3 x1^2.
QuinticReport verify_quintic_lists(std::uint32_t seed = 1, int trials = 5);

} // namespace omegacalc

#include "omegacalc/ternary.hpp"

#include "omegacalc/operators.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace omegacalc {

namespace {

std::vector<VarSet> ternary_vars(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<VarSet> vars;
    for (auto& n : names) vars.push_back({std::move(n), 3});
    return vars;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

TernaryForm::TernaryForm(int degree) : degree(degree) {
    if (degree < 0) throw std::invalid_argument("TernaryForm: negative degree");
}

void TernaryForm::add_term(const std::array<int, 3>& exp, const Rational& c) {
    if (exp[0] < 0 || exp[1] < 0 || exp[2] < 0)
        throw std::invalid_argument("TernaryForm: negative exponent");
    if (exp[0] + exp[1] + exp[2] != degree)
        throw std::invalid_argument("TernaryForm: exponents do not sum to the degree");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

Rational TernaryForm::coeff(const std::array<int, 3>& exp) const {
    auto it = coeffs.find(exp);
    return it == coeffs.end() ? Rational(0) : it->second;
}

TernaryForm TernaryForm::monomial(const std::array<int, 3>& exp, const Rational& c) {
    TernaryForm f(exp[0] + exp[1] + exp[2]);
    f.add_term(exp, c);
    return f;
}

MultiPoly TernaryForm::to_poly(const std::string& var) const {
    MultiPoly p(std::vector<VarSet>{{var, 3}});
    for (const auto& [exp, c] : coeffs) p.add_term({exp[0], exp[1], exp[2]}, c);
    return p;
}

TernaryForm TernaryForm::from_poly(const MultiPoly& p, const std::string& var) {
    int vi = p.varset_index(var);
    if (vi < 0 || p.vars()[static_cast<size_t>(vi)].arity != 3)
        throw std::invalid_argument("TernaryForm: polynomial lacks ternary varset " + var);
    for (const auto& v : p.vars())
        if (v.name != var && p.mentions(v.name))
            throw std::invalid_argument("TernaryForm: polynomial mentions varset " + v.name);
    if (p.is_zero()) return TernaryForm(0);
    if (!p.is_homogeneous())
        throw std::invalid_argument("TernaryForm: polynomial not homogeneous");
    int off = p.comp_offset(var);
    TernaryForm f(*p.total_degree());
    for (const auto& [exp, c] : p.terms())
        f.add_term({exp[static_cast<size_t>(off)], exp[static_cast<size_t>(off + 1)],
                    exp[static_cast<size_t>(off + 2)]},
                   c);
    return f;
}

const std::vector<std::string>& tableau_letters() {
    static const std::vector<std::string> names{"alpha", "beta",  "gamma", "delta",
                                                "epsilon", "zeta", "eta",   "theta"};
    return names;
}

TableauSpec parse_tableau_spec(const std::string& text, int degree) {
    TableauSpec spec;
    spec.degree = degree;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, '|')) {
        std::vector<int> counts;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            size_t pos = 0;
            int n = std::stoi(cell, &pos);
            while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
            if (pos != cell.size())
                throw std::invalid_argument("parse_tableau_spec: bad count '" + cell + "'");
            counts.push_back(n);
        }
        if (counts.empty()) throw std::invalid_argument("parse_tableau_spec: empty row");
        spec.rows.push_back(std::move(counts));
    }
    if (spec.rows.empty()) throw std::invalid_argument("parse_tableau_spec: empty spec");
    return spec;
}

BracketMonomial parse_tableau(const TableauSpec& spec) {
    const auto& pool = tableau_letters();
    const size_t nrows = spec.rows.size();
    if (nrows < 2 || nrows > 3)
        throw std::invalid_argument("parse_tableau: need two or three rows");
    if (spec.degree < 1) throw std::invalid_argument("parse_tableau: nonpositive degree");
    const size_t width = spec.rows[0].size();
    if (width == 0 || width > pool.size())
        throw std::invalid_argument("parse_tableau: need between 1 and 8 letters");
    for (const auto& row : spec.rows) {
        if (row.size() != width)
            throw std::invalid_argument("parse_tableau: ragged letter counts");
        for (int c : row)
            if (c < 0) throw std::invalid_argument("parse_tableau: negative count");
    }

    std::vector<int> totals(width, 0);
    for (const auto& row : spec.rows)
        for (size_t j = 0; j < width; ++j) totals[j] += row[j];
    for (size_t j = 0; j < width; ++j)
        if (totals[j] > spec.degree)
            throw std::invalid_argument("parse_tableau: letter " + pool[j] +
                                        " exceeds the form degree");

    // the unique weakly-increasing filling of each row
    std::vector<std::vector<int>> filling(nrows);
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < width; ++j)
            filling[i].insert(filling[i].end(), static_cast<size_t>(spec.rows[i][j]),
                              static_cast<int>(j));
    for (size_t i = 1; i < nrows; ++i) {
        if (filling[i].size() > filling[i - 1].size())
            throw std::invalid_argument("parse_tableau: row lengths increase");
        for (size_t c = 0; c < filling[i].size(); ++c)
            if (filling[i - 1][c] >= filling[i][c])
                throw std::invalid_argument("parse_tableau: filling is not semistandard");
    }

    BracketMonomial mono;
    for (size_t c = 0; c < filling[0].size(); ++c) {
        size_t height = 1;
        while (height < nrows && c < filling[height].size()) ++height;
        if (height == 3)
            mono.det_factors.push_back(
                {pool[static_cast<size_t>(filling[0][c])], pool[static_cast<size_t>(filling[1][c])],
                 pool[static_cast<size_t>(filling[2][c])]});
        else if (height == 2)
            mono.u_factors.push_back({pool[static_cast<size_t>(filling[0][c])],
                                      pool[static_cast<size_t>(filling[1][c])]});
        else
            mono.linear_factors.push_back(pool[static_cast<size_t>(filling[0][c])]);
    }
    // letters short of the full degree pick up trailing one-cell columns
    for (size_t j = 0; j < width; ++j)
        mono.linear_factors.insert(mono.linear_factors.end(),
                                   static_cast<size_t>(spec.degree - totals[j]), pool[j]);
    return mono;
}

std::map<std::string, int> BracketMonomial::letter_degrees() const {
    std::map<std::string, int> degs;
    for (const auto& f : det_factors)
        for (const auto& l : f) ++degs[l];
    for (const auto& f : u_factors)
        for (const auto& l : f) ++degs[l];
    for (const auto& l : linear_factors) ++degs[l];
    return degs;
}

BracketMonomial BracketMonomial::renamed(const std::map<std::string, std::string>& repl) const {
    auto sub = [&repl](const std::string& l) {
        auto it = repl.find(l);
        return it == repl.end() ? l : it->second;
    };
    BracketMonomial out = *this;
    for (auto& f : out.det_factors)
        for (auto& l : f) l = sub(l);
    for (auto& f : out.u_factors)
        for (auto& l : f) l = sub(l);
    for (auto& l : out.linear_factors) l = sub(l);
    return out;
}

BracketMonomial operator*(BracketMonomial a, const BracketMonomial& b) {
    a.det_factors.insert(a.det_factors.end(), b.det_factors.begin(), b.det_factors.end());
    a.u_factors.insert(a.u_factors.end(), b.u_factors.begin(), b.u_factors.end());
    a.linear_factors.insert(a.linear_factors.end(), b.linear_factors.begin(),
                            b.linear_factors.end());
    return a;
}

std::string BracketMonomial::str() const {
    std::ostringstream os;
    auto run = [&os](const std::string& piece, int count) {
        if (os.tellp() > 0) os << " ";
        os << piece;
        if (count > 1) os << "^" << count;
    };
    auto emit = [&run](const auto& factors, const auto& fmt) {
        for (size_t i = 0; i < factors.size();) {
            size_t j = i;
            while (j < factors.size() && factors[j] == factors[i]) ++j;
            run(fmt(factors[i]), static_cast<int>(j - i));
            i = j;
        }
    };
    emit(det_factors, [](const std::array<std::string, 3>& f) {
        return "(" + f[0] + " " + f[1] + " " + f[2] + ")";
    });
    emit(u_factors, [](const std::array<std::string, 2>& f) {
        return "(" + f[0] + " " + f[1] + " u)";
    });
    emit(linear_factors, [](const std::string& l) { return l + "_x"; });
    if (os.tellp() == 0) return "1";
    return os.str();
}

MultiPoly evaluate_monomial(const BracketMonomial& mono, const TernaryForm& F,
                            const std::string& x, const std::string& u) {
    if (x == u) throw std::invalid_argument("evaluate_monomial: x and u names collide");
    auto degs = mono.letter_degrees();
    for (const auto& [l, t] : degs) {
        if (l == x || l == u)
            throw std::invalid_argument("evaluate_monomial: letter collides with " + l);
        if (t != F.degree)
            throw std::invalid_argument("evaluate_monomial: letter " + l + " occurs " +
                                        std::to_string(t) + " times, form degree is " +
                                        std::to_string(F.degree));
    }

    struct Pending {
        MultiPoly poly;
        std::vector<std::string> letters;
        bool used = false;
    };
    std::vector<Pending> pending;
    for (const auto& f : mono.det_factors)
        pending.push_back({bracket3(ternary_vars({f[0], f[1], f[2]}), f[0], f[1], f[2]),
                           {f[0], f[1], f[2]}});
    for (const auto& f : mono.u_factors)
        pending.push_back({bracket3(ternary_vars({f[0], f[1], u}), f[0], f[1], u), {f[0], f[1]}});
    for (const auto& l : mono.linear_factors)
        pending.push_back({pairing(ternary_vars({l, x}), l, x), {l}});

    std::set<std::string> remaining;
    for (const auto& [l, t] : degs) remaining.insert(l);

    MultiPoly acc = MultiPoly::constant({}, Rational(1));
    while (!remaining.empty()) {
        // cheapest first: smallest raw expansion of the factors still to come
        std::string best;
        double best_cost = std::numeric_limits<double>::infinity();
        for (const auto& l : remaining) {
            double cost = 1;
            for (const auto& p : pending)
                if (!p.used && std::find(p.letters.begin(), p.letters.end(), l) != p.letters.end())
                    cost *= static_cast<double>(p.poly.terms().size());
            if (cost < best_cost) {
                best_cost = cost;
                best = l;
            }
        }
        for (auto& p : pending)
            if (!p.used &&
                std::find(p.letters.begin(), p.letters.end(), best) != p.letters.end()) {
                acc = acc * p.poly;
                p.used = true;
            }
        acc = apply_letter(F.to_poly(best), best, acc);
        remaining.erase(best);
    }
    return acc;
}

MultiPoly evaluate_concomitant(const Concomitant& expr, const TernaryForm& F,
                               const std::string& x, const std::string& u) {
    MultiPoly out;
    for (const auto& term : expr) out += term.coef * evaluate_monomial(term.mono, F, x, u);
    return out;
}

namespace {

BracketMonomial tableau(const std::string& text) {
    return parse_tableau(parse_tableau_spec(text));
}

} // namespace

std::vector<Concomitant> degree3_concomitants() {
    static const std::vector<std::string> specs{
        "5,4,1|0,1,3|0,0,1", "5,3,3|0,2,0|0,0,2", "5,3,0|0,2,4|0,0,1", "5,3,1|0,2,2|0,0,2",
        "5,2,1|0,3,2|0,0,2", "5,1,0|0,4,2|0,0,3", "5,1,1|0,4,0|0,0,4"};
    std::vector<Concomitant> out;
    for (const auto& s : specs) out.push_back({{Rational(1), tableau(s)}});
    return out;
}

std::vector<Concomitant> degree4_concomitants() {
    std::vector<Concomitant> out;
    out.push_back({{Rational(50), tableau("5,3,4,4|0,2,1,1")},
                   {Rational(-19), tableau("5,1,5,5|0,4,0,0")}});
    out.push_back({{Rational(5), tableau("5,5,4,0|0,0,1,5")},
                   {Rational(-8), tableau("5,4,0,0|0,1,5,0")}});
    BracketMonomial half = tableau("5,1|0,4");
    BracketMonomial squared =
        half * half.renamed({{"alpha", "gamma"}, {"beta", "delta"}});
    out.push_back({{Rational(1), squared}, {Rational(2), tableau("5,3,2,2|0,2,3,3")}});
    out.push_back({{Rational(1), tableau("5,3,2,0|0,2,3,5")}});
    return out;
}

QuinticReport verify_quintic_lists(std::uint32_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("verify_quintic_lists: need at least one trial");
    QuinticReport rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> cd(-4, 4);
    const std::vector<VarSet> xv{{"x", 3}};
    auto random_linear = [&]() {
        MultiPoly l(xv);
        while (l.is_zero()) {
            l = MultiPoly(xv);
            for (int i = 0; i < 3; ++i)
                l += Rational(cd(rng)) * MultiPoly::variable(xv, "x", i);
        }
        return l;
    };

    auto deg3 = degree3_concomitants();
    auto deg4 = degree4_concomitants();
    rep.vanish_deg3 = rep.vanish_deg4 = true;
    for (int trial = 0; trial < trials; ++trial) {
        MultiPoly l1 = random_linear(), l2 = random_linear();
        // keep the two lines distinct so the sample sits on the open stratum
        auto proportional = [](const MultiPoly& a, const MultiPoly& b) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    std::vector<int> ei(3, 0), ej(3, 0);
                    ei[static_cast<size_t>(i)] = 1;
                    ej[static_cast<size_t>(j)] = 1;
                    if (a.coeff(ei) * b.coeff(ej) != a.coeff(ej) * b.coeff(ei)) return false;
                }
            return true;
        };
        while (proportional(l1, l2)) l2 = random_linear();
        TernaryForm F = TernaryForm::from_poly(l1.pow(3) * l2.pow(2), "x");
        for (size_t i = 0; i < deg3.size(); ++i)
            if (!evaluate_concomitant(deg3[i], F).is_zero()) {
                rep.vanish_deg3 = false;
                rep.failures.push_back("degree-3 entry " + std::to_string(i + 1) +
                                       " nonzero on sample " + std::to_string(trial + 1));
            }
        for (size_t i = 0; i < deg4.size(); ++i)
            if (!evaluate_concomitant(deg4[i], F).is_zero()) {
                rep.vanish_deg4 = false;
                rep.failures.push_back("degree-4 entry " + std::to_string(i + 1) +
                                       " nonzero on sample " + std::to_string(trial + 1));
            }
    }

    BracketMonomial psi1 = tableau("5,3,4,4|0,2,1,1");
    BracketMonomial psi2 = tableau("5,1,5,5|0,4,0,0");

    TernaryForm split(5);
    split.add_term({5, 0, 0}, Rational(1));
    split.add_term({0, 5, 0}, Rational(-1));
    MultiPoly v1 = evaluate_monomial(psi1, split);
    MultiPoly v2 = evaluate_monomial(psi2, split);
    if (v1.is_zero() || v2.is_zero() || v1.vars() != v2.vars()) {
        rep.failures.push_back("a basis concomitant degenerates on x0^5 - x1^5");
    } else {
        const auto& [exp0, a] = *v1.terms().begin();
        Rational b = v2.coeff(exp0);
        rep.independent = (a * v2 != b * v1);
        if (!rep.independent) rep.failures.push_back("basis concomitants are proportional");
    }

    TernaryForm sample = TernaryForm::monomial({3, 2, 0});
    MultiPoly w1 = evaluate_monomial(psi1, sample);
    MultiPoly w2 = evaluate_monomial(psi2, sample);
    if (w1.terms().size() != 1 || w2.terms().size() != 1 ||
        w1.terms().begin()->first != w2.terms().begin()->first) {
        rep.failures.push_back("basis evaluations on x0^3 x1^2 are not a common monomial");
    } else {
        Rational c1 = w1.terms().begin()->second;
        Rational c2 = w2.terms().begin()->second;
        Integer n1 = c2.num() * c1.den();
        Integer n2 = -(c1.num() * c2.den());
        Integer g = gcd(n1, n2);
        if (g != 0) {
            n1 /= g;
            n2 /= g;
            if (n1 < 0) {
                n1 = -n1;
                n2 = -n2;
            }
        }
        rep.ratio = {n1, n2};
        rep.ratio_ok = (n1 == 50 && n2 == -19);
        if (!rep.ratio_ok)
            rep.failures.push_back("solved ratio " + n1.get_str() + ":" + n2.get_str() +
                                   " differs from 50:-19");
    }
    return rep;
}

} // namespace omegacalc

#include "omegacalc/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegacalc {

namespace {

void check_vars(const std::vector<VarSet>& vars) {
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].name.empty()) throw std::invalid_argument("VarSet: empty name");
        if (vars[i].arity <= 0) throw std::invalid_argument("VarSet: nonpositive arity");
        if (i > 0 && !(vars[i - 1].name < vars[i].name))
            throw std::invalid_argument("MultiPoly: varsets must be strictly sorted by name");
    }
}

} // namespace

MultiPoly::MultiPoly(std::vector<VarSet> vars) : vars_(std::move(vars)) { check_vars(vars_); }

MultiPoly::MultiPoly(std::vector<VarSet> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    check_vars(vars_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        check_exp(it->first);
        for (int e : it->first)
            if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

MultiPoly MultiPoly::constant(std::vector<VarSet> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::vector<int>(p.ncomp(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<VarSet> vars, const std::string& name, int comp) {
    MultiPoly p(std::move(vars));
    std::vector<int> exp(p.ncomp(), 0);
    exp[p.comp_index(name, comp)] = 1;
    p.terms_.emplace(std::move(exp), Rational(1));
    return p;
}

int MultiPoly::ncomp() const {
    int n = 0;
    for (const auto& v : vars_) n += v.arity;
    return n;
}

int MultiPoly::varset_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

int MultiPoly::comp_offset(const std::string& name) const {
    int off = 0;
    for (const auto& v : vars_) {
        if (v.name == name) return off;
        off += v.arity;
    }
    throw std::invalid_argument("MultiPoly: unknown varset " + name);
}

int MultiPoly::comp_index(const std::string& name, int comp) const {
    int vi = varset_index(name);
    if (vi < 0) throw std::invalid_argument("MultiPoly: unknown varset " + name);
    if (comp < 0 || comp >= vars_[vi].arity)
        throw std::invalid_argument("MultiPoly: component out of range for " + name);
    return comp_offset(name) + comp;
}

std::optional<int> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // grlex: the last term has maximal total degree
    const auto& exp = terms_.rbegin()->first;
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

int MultiPoly::degree_in(const std::string& name) const {
    int vi = varset_index(name);
    if (vi < 0) return 0;
    int off = comp_offset(name), ar = vars_[vi].arity;
    int best = 0;
    for (const auto& [exp, c] : terms_) {
        int d = 0;
        for (int j = 0; j < ar; ++j) d += exp[off + j];
        best = std::max(best, d);
    }
    return best;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d0 = -1;
    for (const auto& [exp, c] : terms_) {
        long d = 0;
        for (int e : exp) d += e;
        if (d0 < 0) d0 = d;
        else if (d != d0) return false;
    }
    return true;
}

bool MultiPoly::is_homogeneous_in(const std::string& name) const {
    int vi = varset_index(name);
    if (vi < 0) return true;
    int off = comp_offset(name), ar = vars_[vi].arity;
    int d0 = -1;
    for (const auto& [exp, c] : terms_) {
        int d = 0;
        for (int j = 0; j < ar; ++j) d += exp[off + j];
        if (d0 < 0) d0 = d;
        else if (d != d0) return false;
    }
    return true;
}

bool MultiPoly::mentions(const std::string& name) const {
    int vi = varset_index(name);
    if (vi < 0) return false;
    int off = comp_offset(name), ar = vars_[vi].arity;
    for (const auto& [exp, c] : terms_)
        for (int j = 0; j < ar; ++j)
            if (exp[off + j] > 0) return true;
    return false;
}

void MultiPoly::check_exp(const std::vector<int>& exp) const {
    if (static_cast<int>(exp.size()) != ncomp())
        throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
}

void MultiPoly::add_term(std::vector<int> exp, const Rational& c) {
    check_exp(exp);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exp), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<VarSet> merge_vars(const std::vector<VarSet>& a, const std::vector<VarSet>& b) {
    std::vector<VarSet> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].name < b[j].name)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].name < a[i].name) {
            out.push_back(b[j++]);
        } else {
            if (a[i].arity != b[j].arity)
                throw std::invalid_argument("merge_vars: arity conflict on " + a[i].name);
            out.push_back(a[i++]);
            ++j;
        }
    }
    return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<VarSet>& newvars) const {
    check_vars(newvars);
    // map each old component index to its slot in the new layout
    std::vector<int> map_to(static_cast<size_t>(ncomp()), -1);
    int old_off = 0;
    for (const auto& v : vars_) {
        int new_off = 0;
        bool found = false;
        for (const auto& nv : newvars) {
            if (nv.name == v.name) {
                if (nv.arity != v.arity)
                    throw std::invalid_argument("with_vars: arity conflict on " + v.name);
                found = true;
                break;
            }
            new_off += nv.arity;
        }
        if (!found) {
            if (mentions(v.name))
                throw std::invalid_argument("with_vars: dropped varset " + v.name +
                                            " is mentioned");
            for (int j = 0; j < v.arity; ++j) map_to[static_cast<size_t>(old_off + j)] = -1;
        } else {
            for (int j = 0; j < v.arity; ++j) map_to[static_cast<size_t>(old_off + j)] = new_off + j;
        }
        old_off += v.arity;
    }
    MultiPoly out(newvars);
    int n = out.ncomp();
    for (const auto& [exp, c] : terms_) {
        std::vector<int> nexp(static_cast<size_t>(n), 0);
        for (size_t k = 0; k < exp.size(); ++k) {
            if (map_to[k] < 0) continue; // unmentioned, exponent 0
            nexp[static_cast<size_t>(map_to[k])] = exp[k];
        }
        out.terms_.emplace(std::move(nexp), c);
    }
    return out;
}

MultiPoly MultiPoly::dropped(const std::string& name) const {
    if (mentions(name))
        throw std::invalid_argument("MultiPoly::dropped: varset " + name + " is mentioned");
    std::vector<VarSet> nv;
    for (const auto& v : vars_)
        if (v.name != name) nv.push_back(v);
    if (nv.size() == vars_.size()) return *this;
    return with_vars(nv);
}

MultiPoly MultiPoly::pruned() const {
    std::vector<VarSet> nv;
    for (const auto& v : vars_)
        if (mentions(v.name)) nv.push_back(v);
    if (nv.size() == vars_.size()) return *this;
    return with_vars(nv);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        *this = with_vars(merge_vars(vars_, o.vars_));
        return *this += o.with_vars(vars_);
    }
    for (const auto& [exp, c] : o.terms_) add_term(exp, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        *this = with_vars(merge_vars(vars_, o.vars_));
        return *this -= o.with_vars(vars_);
    }
    for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
        auto mv = merge_vars(a.vars_, b.vars_);
        return a.with_vars(mv) * b.with_vars(mv);
    }
    MultiPoly out(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const bool a_smaller = a.terms_.size() <= b.terms_.size();
    const MultiPoly& outer = a_smaller ? a : b;
    const MultiPoly& inner = a_smaller ? b : a;
    std::vector<int> exp;
    for (const auto& [ea, ca] : outer.terms_) {
        for (const auto& [eb, cb] : inner.terms_) {
            exp = ea;
            for (size_t k = 0; k < exp.size(); ++k) exp[k] += eb[k];
            out.add_term(std::move(exp), ca * cb);
            exp.clear();
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exp, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly acc = MultiPoly::constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto mv = merge_vars(a.vars_, b.vars_);
    return a.with_vars(mv).terms_ == b.with_vars(mv).terms_;
}

MultiPoly pairing(const std::vector<VarSet>& vars, const std::string& a, const std::string& x) {
    MultiPoly p(vars);
    int via = p.varset_index(a), vix = p.varset_index(x);
    if (via < 0 || vix < 0) throw std::invalid_argument("pairing: unknown varset");
    if (p.vars()[static_cast<size_t>(via)].arity != p.vars()[static_cast<size_t>(vix)].arity)
        throw std::invalid_argument("pairing: arity mismatch");
    int ar = p.vars()[static_cast<size_t>(via)].arity;
    for (int i = 0; i < ar; ++i) {
        std::vector<int> exp(static_cast<size_t>(p.ncomp()), 0);
        exp[static_cast<size_t>(p.comp_index(a, i))] += 1;
        exp[static_cast<size_t>(p.comp_index(x, i))] += 1;
        p.add_term(std::move(exp), Rational(1));
    }
    return p;
}

MultiPoly bracket2(const std::vector<VarSet>& vars, const std::string& a, const std::string& b) {
    MultiPoly p(vars);
    for (const auto& n : {a, b})
        if (p.varset_index(n) < 0 || p.vars()[static_cast<size_t>(p.varset_index(n))].arity != 2)
            throw std::invalid_argument("bracket2: " + n + " must be a binary varset");
    for (int s = 0; s < 2; ++s) {
        std::vector<int> exp(static_cast<size_t>(p.ncomp()), 0);
        exp[static_cast<size_t>(p.comp_index(a, s))] += 1;
        exp[static_cast<size_t>(p.comp_index(b, 1 - s))] += 1;
        p.add_term(std::move(exp), Rational(s == 0 ? 1 : -1));
    }
    return p;
}

MultiPoly bracket3(const std::vector<VarSet>& vars, const std::string& a, const std::string& b,
                   const std::string& c) {
    MultiPoly p(vars);
    for (const auto& n : {a, b, c})
        if (p.varset_index(n) < 0 || p.vars()[static_cast<size_t>(p.varset_index(n))].arity != 3)
            throw std::invalid_argument("bracket3: " + n + " must be a ternary varset");
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int t = 0; t < 6; ++t) {
        std::vector<int> exp(static_cast<size_t>(p.ncomp()), 0);
        exp[static_cast<size_t>(p.comp_index(a, perm[t][0]))] += 1;
        exp[static_cast<size_t>(p.comp_index(b, perm[t][1]))] += 1;
        exp[static_cast<size_t>(p.comp_index(c, perm[t][2]))] += 1;
        p.add_term(std::move(exp), Rational(t < 3 ? 1 : -1));
    }
    return p;
}

MultiPoly generic_form(int degree, const std::string& coefs, const std::string& x) {
    if (degree < 0) throw std::invalid_argument("generic_form: negative degree");
    auto vars = merge_vars({VarSet{coefs, degree + 1}}, {VarSet{x, 2}});
    MultiPoly p(vars);
    for (int i = 0; i <= degree; ++i) {
        std::vector<int> exp(static_cast<size_t>(p.ncomp()), 0);
        exp[static_cast<size_t>(p.comp_index(coefs, i))] = 1;
        exp[static_cast<size_t>(p.comp_index(x, 0))] = degree - i;
        exp[static_cast<size_t>(p.comp_index(x, 1))] = i;
        p.add_term(std::move(exp), Rational(1));
    }
    return p;
}

BinaryForm::BinaryForm(int degree) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm: coefficient count must be degree+1");
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

const Rational& BinaryForm::coeff(int i) const {
    if (i < 0 || i > degree()) throw std::out_of_range("BinaryForm::coeff");
    return coeffs_[static_cast<size_t>(i)];
}

void BinaryForm::set_coeff(int i, const Rational& c) {
    if (i < 0 || i > degree()) throw std::out_of_range("BinaryForm::set_coeff");
    coeffs_[static_cast<size_t>(i)] = c;
}

Rational BinaryForm::scaled(int i) const { return coeff(i) / Rational(binomial(degree(), i)); }

BinaryForm BinaryForm::from_scaled(int degree, const std::vector<Rational>& alphas) {
    if (degree < 0 || alphas.size() != static_cast<size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm::from_scaled: coefficient count");
    BinaryForm f(degree);
    for (int i = 0; i <= degree; ++i)
        f.coeffs_[static_cast<size_t>(i)] =
            alphas[static_cast<size_t>(i)] * Rational(binomial(degree, i));
    return f;
}

BinaryForm BinaryForm::monomial(int degree, int i, const Rational& c) {
    BinaryForm f(degree);
    f.set_coeff(i, c);
    return f;
}

BinaryForm BinaryForm::dx0() const {
    int d = degree();
    if (d == 0) return BinaryForm(0);
    BinaryForm out(d - 1);
    for (int i = 0; i < d; ++i)
        out.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)] * Rational(d - i);
    return out;
}

BinaryForm BinaryForm::dx1() const {
    int d = degree();
    if (d == 0) return BinaryForm(0);
    BinaryForm out(d - 1);
    for (int i = 0; i < d; ++i)
        out.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i + 1)] * Rational(i + 1);
    return out;
}

BinaryForm BinaryForm::diff(int ord0, int ord1) const {
    if (ord0 < 0 || ord1 < 0) throw std::invalid_argument("BinaryForm::diff: negative order");
    if (ord0 + ord1 > degree()) return BinaryForm(0);
    BinaryForm out = *this;
    for (int t = 0; t < ord0; ++t) out = out.dx0();
    for (int t = 0; t < ord1; ++t) out = out.dx1();
    return out;
}

Rational BinaryForm::evaluate(const Rational& x0, const Rational& x1) const {
    // Horner in x1/x0 is awkward for homogeneous pairs; just accumulate powers.
    int d = degree();
    Rational acc(0), p0(1);
    std::vector<Rational> pow1(static_cast<size_t>(d) + 1);
    pow1[0] = Rational(1);
    for (int i = 1; i <= d; ++i) pow1[static_cast<size_t>(i)] = pow1[static_cast<size_t>(i - 1)] * x1;
    for (int i = d; i >= 0; --i) {
        acc += coeffs_[static_cast<size_t>(i)] * p0 * pow1[static_cast<size_t>(i)];
        if (i > 0) p0 *= x0;
    }
    return acc;
}

BinaryForm BinaryForm::compose_linear(const Rational& g00, const Rational& g01, const Rational& g10,
                                      const Rational& g11) const {
    int d = degree();
    // powers of L0 = g00 x0 + g01 x1 and L1 = g10 x0 + g11 x1
    std::vector<BinaryForm> p0, p1;
    p0.reserve(static_cast<size_t>(d) + 1);
    p1.reserve(static_cast<size_t>(d) + 1);
    BinaryForm one(0);
    one.set_coeff(0, Rational(1));
    BinaryForm L0(1), L1(1);
    L0.set_coeff(0, g00);
    L0.set_coeff(1, g01);
    L1.set_coeff(0, g10);
    L1.set_coeff(1, g11);
    p0.push_back(one);
    p1.push_back(one);
    for (int i = 1; i <= d; ++i) {
        p0.push_back(p0.back() * L0);
        p1.push_back(p1.back() * L1);
    }
    BinaryForm out(d);
    for (int i = 0; i <= d; ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        out = out + coeffs_[static_cast<size_t>(i)] *
                        (p0[static_cast<size_t>(d - i)] * p1[static_cast<size_t>(i)]);
    }
    return out;
}

MultiPoly BinaryForm::to_poly(const std::string& var) const {
    MultiPoly p({VarSet{var, 2}});
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        p.add_term({d - i, i}, coeffs_[static_cast<size_t>(i)]);
    }
    return p;
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) return BinaryForm(0);
    int vi = p.varset_index(var);
    if (vi < 0 || p.vars()[static_cast<size_t>(vi)].arity != 2)
        throw std::invalid_argument("BinaryForm::from_poly: need binary varset " + var);
    for (const auto& v : p.vars())
        if (v.name != var && p.mentions(v.name))
            throw std::invalid_argument("BinaryForm::from_poly: extra variables mentioned");
    if (!p.is_homogeneous_in(var))
        throw std::invalid_argument("BinaryForm::from_poly: not homogeneous");
    int off = p.comp_offset(var);
    int d = p.degree_in(var);
    BinaryForm f(d);
    for (const auto& [exp, c] : p.terms()) f.set_coeff(exp[static_cast<size_t>(off) + 1], c);
    return f;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm out(degree());
    for (int i = 0; i <= degree(); ++i) out.coeffs_[static_cast<size_t>(i)] = -coeffs_[static_cast<size_t>(i)];
    return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        throw std::invalid_argument("BinaryForm: degree mismatch in +");
    }
    BinaryForm out(a.degree());
    for (int i = 0; i <= a.degree(); ++i)
        out.coeffs_[static_cast<size_t>(i)] =
            a.coeffs_[static_cast<size_t>(i)] + b.coeffs_[static_cast<size_t>(i)];
    return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (b.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
            out.coeffs_[static_cast<size_t>(i + j)] +=
                a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
        }
    }
    return out;
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
    BinaryForm out(f.degree());
    for (int i = 0; i <= f.degree(); ++i) out.coeffs_[static_cast<size_t>(i)] = c * f.coeffs_[static_cast<size_t>(i)];
    return out;
}

BinaryForm BinaryForm::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BinaryForm::pow: negative exponent");
    BinaryForm acc(0);
    acc.set_coeff(0, Rational(1));
    for (int t = 0; t < e; ++t) acc = acc * *this;
    return acc;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.degree() != b.degree()) return false;
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

} // namespace omegacalc

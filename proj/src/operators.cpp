#include "omegacalc/operators.hpp"

#include <stdexcept>

namespace omegacalc {

namespace {

// n (n-1) ... (n-t+1)
Integer falling(int n, int t) {
    Integer r(1);
    for (int s = 0; s < t; ++s) r *= (n - s);
    return r;
}

void require_arity(const MultiPoly& p, const std::string& name, int arity) {
    int vi = p.varset_index(name);
    if (vi < 0) throw std::invalid_argument("unknown varset " + name);
    if (p.vars()[static_cast<size_t>(vi)].arity != arity)
        throw std::invalid_argument("varset " + name + " must have arity " + std::to_string(arity));
}

// all exponent tuples of given length summing to n
void multi_indices(int len, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len - 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int i = 0; i <= n; ++i) {
        cur.push_back(i);
        multi_indices(len, n - i, cur, out);
        cur.pop_back();
    }
}

Integer multinomial(int n, const std::vector<int>& parts) {
    Integer r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

} // namespace

MultiPoly differentiate(const MultiPoly& p, const std::string& name, int comp, int order) {
    if (order < 0) throw std::invalid_argument("differentiate: negative order");
    int idx = p.comp_index(name, comp); // throws on unknown variable
    if (order == 0) return p;
    MultiPoly out(p.vars());
    for (const auto& [exp, c] : p.terms()) {
        int n = exp[static_cast<size_t>(idx)];
        if (n < order) continue;
        std::vector<int> nexp = exp;
        nexp[static_cast<size_t>(idx)] = n - order;
        out.add_term(std::move(nexp), c * Rational(falling(n, order)));
    }
    return out;
}

MultiPoly dir_partial(const MultiPoly& p, const std::string& coefset, const std::string& diffset,
                      int n) {
    if (n < 0) throw std::invalid_argument("dir_partial: negative power");
    if (n == 0) return p;
    int vic = p.varset_index(coefset);
    if (vic < 0) throw std::invalid_argument("dir_partial: unknown varset " + coefset);
    int ar = p.vars()[static_cast<size_t>(vic)].arity;
    require_arity(p, diffset, ar);
    int offc = p.comp_offset(coefset), offd = p.comp_offset(diffset);

    std::vector<std::vector<int>> idxs;
    std::vector<int> cur;
    multi_indices(ar, n, cur, idxs);

    MultiPoly out(p.vars());
    for (const auto& t : idxs) {
        Rational mult(multinomial(n, t));
        for (const auto& [exp, c] : p.terms()) {
            Integer fall(1);
            bool ok = true;
            for (int j = 0; j < ar && ok; ++j) {
                int have = exp[static_cast<size_t>(offd + j)];
                if (have < t[static_cast<size_t>(j)]) ok = false;
                else fall *= falling(have, t[static_cast<size_t>(j)]);
            }
            if (!ok) continue;
            std::vector<int> nexp = exp;
            for (int j = 0; j < ar; ++j) {
                nexp[static_cast<size_t>(offd + j)] -= t[static_cast<size_t>(j)];
                nexp[static_cast<size_t>(offc + j)] += t[static_cast<size_t>(j)];
            }
            out.add_term(std::move(nexp), c * mult * Rational(fall));
        }
    }
    return out;
}

MultiPoly omega_power(const MultiPoly& p, const std::string& xset, const std::string& yset,
                      int k) {
    if (k < 0) throw std::invalid_argument("omega_power: negative power");
    if (xset == yset) throw std::invalid_argument("omega_power: varsets must be distinct");
    require_arity(p, xset, 2);
    require_arity(p, yset, 2);
    if (k == 0) return p;
    int x0 = p.comp_index(xset, 0), x1 = p.comp_index(xset, 1);
    int y0 = p.comp_index(yset, 0), y1 = p.comp_index(yset, 1);

    MultiPoly out(p.vars());
    for (const auto& [exp, c] : p.terms()) {
        int ex0 = exp[static_cast<size_t>(x0)], ex1 = exp[static_cast<size_t>(x1)];
        int ey0 = exp[static_cast<size_t>(y0)], ey1 = exp[static_cast<size_t>(y1)];
        // Omega^k = sum_i (-1)^i C(k,i) dx0^(k-i) dx1^i dy0^i dy1^(k-i)
        for (int i = 0; i <= k; ++i) {
            if (ex0 < k - i || ex1 < i || ey0 < i || ey1 < k - i) continue;
            Integer mult = binomial(k, i) * falling(ex0, k - i) * falling(ex1, i) *
                           falling(ey0, i) * falling(ey1, k - i);
            if (i % 2) mult = -mult;
            std::vector<int> nexp = exp;
            nexp[static_cast<size_t>(x0)] -= k - i;
            nexp[static_cast<size_t>(x1)] -= i;
            nexp[static_cast<size_t>(y0)] -= i;
            nexp[static_cast<size_t>(y1)] -= k - i;
            out.add_term(std::move(nexp), c * Rational(mult));
        }
    }
    return out;
}

MultiPoly identify(const MultiPoly& p, const std::string& from, const std::string& to) {
    int vif = p.varset_index(from);
    if (vif < 0) throw std::invalid_argument("identify: unknown varset " + from);
    int ar = p.vars()[static_cast<size_t>(vif)].arity;
    if (from == to) return p;
    int vit = p.varset_index(to);
    if (vit >= 0 && p.vars()[static_cast<size_t>(vit)].arity != ar)
        throw std::invalid_argument("identify: arity mismatch between " + from + " and " + to);

    auto vars2 = merge_vars(p.vars(), {VarSet{to, ar}});
    MultiPoly q = p.with_vars(vars2);
    int offf = q.comp_offset(from), offt = q.comp_offset(to);
    MultiPoly out(vars2);
    for (const auto& [exp, c] : q.terms()) {
        std::vector<int> nexp = exp;
        for (int j = 0; j < ar; ++j) {
            nexp[static_cast<size_t>(offt + j)] += nexp[static_cast<size_t>(offf + j)];
            nexp[static_cast<size_t>(offf + j)] = 0;
        }
        out.add_term(std::move(nexp), c);
    }
    return out.dropped(from);
}

MultiPoly polarize(const BinaryForm& B, int e, const std::string& yname,
                   const std::string& xname) {
    if (e < 0 || e > B.degree())
        throw std::domain_error("polarize: order must satisfy 0 <= e <= deg B");
    auto vars = merge_vars({VarSet{xname, 2}}, {VarSet{yname, 2}});
    MultiPoly p = B.to_poly(xname).with_vars(vars);
    return dir_partial(p, yname, xname, e);
}

MultiPoly apply_letter(const MultiPoly& op_form, const std::string& letter,
                       const MultiPoly& target) {
    for (const auto& v : op_form.vars())
        if (v.name != letter && op_form.mentions(v.name))
            throw std::invalid_argument("apply_letter: operator form mentions non-letter varset " +
                                        v.name);
    if (!op_form.is_homogeneous_in(letter))
        throw std::invalid_argument("apply_letter: operator form not homogeneous in " + letter);
    int vio = op_form.varset_index(letter);
    if (vio < 0) throw std::invalid_argument("apply_letter: operator form lacks varset " + letter);
    int ar = op_form.vars()[static_cast<size_t>(vio)].arity;
    int m = op_form.degree_in(letter);

    int vit = target.varset_index(letter);
    if (vit < 0) {
        // target constant in the letter: only m = 0 can contribute
        if (m > 0) return MultiPoly(target.vars());
    } else if (target.vars()[static_cast<size_t>(vit)].arity != ar) {
        throw std::invalid_argument("apply_letter: arity mismatch on " + letter);
    }

    int offo = op_form.comp_offset(letter);
    int offt = vit >= 0 ? target.comp_offset(letter) : 0;
    Rational inv_mfact = Rational(Integer(1), factorial(m));

    MultiPoly out(target.vars());
    for (const auto& [oexp, oc] : op_form.terms()) {
        Rational scale = oc * inv_mfact;
        for (const auto& [texp, tc] : target.terms()) {
            Integer fall(1);
            bool ok = true;
            for (int j = 0; j < ar && ok; ++j) {
                int want = oexp[static_cast<size_t>(offo + j)];
                int have = vit >= 0 ? texp[static_cast<size_t>(offt + j)] : 0;
                if (have < want) ok = false;
                else fall *= falling(have, want);
            }
            if (!ok) continue;
            std::vector<int> nexp = texp;
            for (int j = 0; j < ar; ++j)
                nexp[static_cast<size_t>(offt + j)] -= oexp[static_cast<size_t>(offo + j)];
            out.add_term(std::move(nexp), scale * tc * Rational(fall));
        }
    }
    if (out.varset_index(letter) >= 0 && !out.mentions(letter)) out = out.dropped(letter);
    return out;
}

MultiPoly subst_components(const MultiPoly& p, const std::string& name,
                           const std::vector<MultiPoly>& vals) {
    int vi = p.varset_index(name);
    if (vi < 0) throw std::invalid_argument("subst_components: unknown varset " + name);
    int ar = p.vars()[static_cast<size_t>(vi)].arity;
    if (static_cast<int>(vals.size()) != ar)
        throw std::invalid_argument("subst_components: need one value per component");

    std::vector<VarSet> base;
    for (const auto& v : p.vars())
        if (v.name != name) base.push_back(v);
    auto rvars = base;
    for (const auto& v : vals) rvars = merge_vars(rvars, v.vars());

    int off = p.comp_offset(name);
    // cache powers of each substituted value
    std::vector<std::vector<MultiPoly>> pows(static_cast<size_t>(ar));
    for (int j = 0; j < ar; ++j)
        pows[static_cast<size_t>(j)].push_back(MultiPoly::constant(rvars, Rational(1)));

    MultiPoly out(rvars);
    for (const auto& [exp, c] : p.terms()) {
        // monomial in the remaining varsets
        MultiPoly piece(rvars);
        {
            std::vector<int> nexp(static_cast<size_t>(out.ncomp()), 0);
            int src = 0, dst = 0;
            for (const auto& v : p.vars()) {
                if (v.name == name) {
                    src += v.arity;
                    continue;
                }
                int roff = out.comp_offset(v.name);
                for (int j = 0; j < v.arity; ++j)
                    nexp[static_cast<size_t>(roff + j)] = exp[static_cast<size_t>(src + j)];
                src += v.arity;
                (void)dst;
            }
            piece.add_term(std::move(nexp), c);
        }
        for (int j = 0; j < ar; ++j) {
            int e = exp[static_cast<size_t>(off + j)];
            auto& cache = pows[static_cast<size_t>(j)];
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * vals[static_cast<size_t>(j)].with_vars(rvars));
            if (e > 0) piece = piece * cache[static_cast<size_t>(e)];
        }
        out += piece;
    }
    return out;
}

} // namespace omegacalc

#include "omegacalc/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace omegacalc {

namespace {

std::string monomial_string(const MultiPoly& p, const std::vector<int>& exp) {
    std::string s;
    int off = 0;
    for (const auto& v : p.vars()) {
        for (int j = 0; j < v.arity; ++j) {
            int e = exp[static_cast<size_t>(off + j)];
            if (e == 0) continue;
            if (!s.empty()) s += '*';
            s += v.name + std::to_string(j);
            if (e > 1) s += '^' + std::to_string(e);
        }
        off += v.arity;
    }
    return s;
}

} // namespace

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational c = it->second;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono = monomial_string(p, it->first);
        if (mono.empty()) out += mag.str();
        else if (mag.is_one()) out += mono;
        else out += mag.str() + '*' + mono;
    }
    return out;
}

std::string to_string(const BinaryForm& f) { return to_string(f.to_poly("x")); }

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + why);
    }

    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    Rational rational() {
        Integer num = integer();
        if (peek() == '/') {
            ++pos;
            Integer den = integer();
            return Rational(num, den);
        }
        return Rational(num);
    }

    // name = letters/underscore, then component digits
    std::pair<std::string, int> variable() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected variable name");
        std::string name = s.substr(start, pos - start);
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) fail("variable " + name + " lacks a component index");
        int comp = std::stoi(s.substr(dstart, pos - dstart));
        return {name, comp};
    }

    // term = factor ('*' factor)*, factor = rational | var ['^' int]
    void term(int sign, std::vector<std::tuple<std::string, int, int>>& mono, Rational& coef) {
        coef = Rational(sign);
        mono.clear();
        bool first = true;
        while (true) {
            char c = peek();
            if (first || c == '*') {
                if (!first) ++pos;
                char f = peek();
                if (std::isdigit(static_cast<unsigned char>(f))) {
                    coef *= rational();
                } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                    auto [name, comp] = variable();
                    int e = 1;
                    if (peek() == '^') {
                        ++pos;
                        Integer ei = integer();
                        if (ei > 1000000) fail("exponent too large");
                        e = static_cast<int>(ei.get_si());
                    }
                    mono.emplace_back(name, comp, e);
                } else {
                    fail("expected factor");
                }
                first = false;
            } else {
                break;
            }
        }
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text,
                     const std::optional<std::vector<VarSet>>& declared) {
    Parser pr(text);
    struct RawTerm {
        Rational coef;
        std::vector<std::tuple<std::string, int, int>> mono;
    };
    std::vector<RawTerm> raw;

    bool first = true;
    while (!pr.eof()) {
        int sign = 1;
        char c = pr.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pr.pos;
        } else if (!first) {
            pr.fail("expected '+' or '-' between terms");
        }
        RawTerm t;
        pr.term(sign, t.mono, t.coef);
        raw.push_back(std::move(t));
        first = false;
    }
    if (first && !declared) return MultiPoly();

    std::vector<VarSet> vars;
    if (declared) {
        vars = *declared;
    } else {
        for (const auto& t : raw)
            for (const auto& [name, comp, e] : t.mono) {
                bool found = false;
                for (auto& v : vars)
                    if (v.name == name) {
                        v.arity = std::max(v.arity, comp + 1);
                        found = true;
                    }
                if (!found) vars.push_back(VarSet{name, comp + 1});
            }
        std::sort(vars.begin(), vars.end(),
                  [](const VarSet& a, const VarSet& b) { return a.name < b.name; });
    }

    MultiPoly p(vars);
    for (const auto& t : raw) {
        std::vector<int> exp(static_cast<size_t>(p.ncomp()), 0);
        for (const auto& [name, comp, e] : t.mono) {
            int idx = p.comp_index(name, comp); // throws for undeclared variables
            exp[static_cast<size_t>(idx)] += e;
        }
        p.add_term(std::move(exp), t.coef);
    }
    return p;
}

BinaryForm parse_binary_form(const std::string& text) {
    return BinaryForm::from_poly(parse_poly(text, std::vector<VarSet>{VarSet{"x", 2}}));
}

std::string poly_to_json(const MultiPoly& p) {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (const auto& v : p.vars()) j["vars"].push_back({v.name, v.arity});
    j["terms"] = nlohmann::json::array();
    for (const auto& [exp, c] : p.terms()) {
        nlohmann::json t;
        t["exp"] = exp;
        t["num"] = c.num().get_str();
        t["den"] = c.den().get_str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

MultiPoly poly_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<VarSet> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back(VarSet{v.at(0).get<std::string>(), v.at(1).get<int>()});
    MultiPoly p(vars);
    for (const auto& t : j.at("terms")) {
        std::vector<int> exp = t.at("exp").get<std::vector<int>>();
        Rational c(Integer(t.at("num").get<std::string>()),
                   Integer(t.at("den").get<std::string>()));
        p.add_term(std::move(exp), c);
    }
    return p;
}

} // namespace omegacalc

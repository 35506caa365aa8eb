// Command-line front end: parse forms, dispatch to the algebra modules, and
// emit deterministic machine-readable reports (exact rationals throughout).
// Exit codes: 0 success, 1 mathematical-verification failure, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include "omegacalc/covariants.hpp"
#include "omegacalc/emap.hpp"
#include "omegacalc/io.hpp"
#include "omegacalc/ternary.hpp"
#include "omegacalc/verify.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace omegacalc;
using nlohmann::ordered_json;

namespace {

void print_poly(const MultiPoly& p, bool json) {
    std::cout << (json ? poly_to_json(p) : to_string(p)) << '\n';
}

// user-supplied form text: parse failures are usage errors, not math failures
BinaryForm form_arg(const std::string& text) {
    try {
        return parse_binary_form(text);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
}

void print_form(const BinaryForm& f, bool json) {
    if (json)
        std::cout << poly_to_json(f.to_poly()) << '\n';
    else
        std::cout << to_string(f) << '\n';
}

void print_signed_square(const AngularData& ad, const SignedSquare& v) {
    std::cout << ad.twoJ1 << '\t' << ad.twoJ2 << '\t' << ad.twoJ << '\t' << ad.twoM1 << '\t'
              << ad.twoM2 << '\t' << ad.twoM << '\t' << v.sign << '\t' << v.square.num().get_str()
              << '\t' << v.square.den().get_str() << '\n';
}

void print_character(const SL2Character& ch, bool json) {
    if (json) {
        ordered_json arr = ordered_json::array();
        for (auto it = ch.mults.rbegin(); it != ch.mults.rend(); ++it)
            arr.push_back(ordered_json{{"m", it->first}, {"mult", it->second.get_str()}});
        ordered_json out{{"character", arr}, {"dim", ch.dim().get_str()}};
        std::cout << out.dump() << '\n';
    } else {
        for (auto it = ch.mults.rbegin(); it != ch.mults.rend(); ++it)
            std::cout << it->first << '\t' << it->second.get_str() << '\n';
    }
}

TernaryForm read_ternary_form(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open form file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(buf.str());
    TernaryForm f(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        const auto& exp = t.at("exp");
        if (!exp.is_array() || exp.size() != 3)
            throw std::invalid_argument("ternary term exp must have three entries");
        std::array<int, 3> e{exp[0].get<int>(), exp[1].get<int>(), exp[2].get<int>()};
        Integer num(t.at("num").get<std::string>());
        Integer den = t.contains("den") ? Integer(t.at("den").get<std::string>()) : Integer(1);
        f.add_term(e, Rational(num, den));
    }
    return f;
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariant-theoretic calculator for binary and ternary forms"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- transvectants and angular momentum -------------------------------
    auto* tv = app.add_subcommand("transvect", "k-th transvectant of two binary forms");
    std::string tv_a, tv_b;
    int tv_k = 0;
    bool tv_json = false;
    tv->add_option("--a", tv_a, "first form (text format)")->required();
    tv->add_option("--b", tv_b, "second form (text format)")->required();
    tv->add_option("--k", tv_k, "transvectant index")->required();
    tv->add_flag("--json", tv_json, "emit JSON");
    tv->callback([&] {
        print_form(transvectant(form_arg(tv_a), form_arg(tv_b), tv_k), tv_json);
    });

    auto* nc = app.add_subcommand("ncoeff", "monomial transvectant coefficient N");
    MonomialSpec nc_spec;
    nc->add_option("--a1", nc_spec.a1)->required();
    nc->add_option("--a2", nc_spec.a2)->required();
    nc->add_option("--b1", nc_spec.b1)->required();
    nc->add_option("--b2", nc_spec.b2)->required();
    nc->add_option("--k", nc_spec.k)->required();
    nc->callback([&] { std::cout << n_coeff(nc_spec).str() << '\n'; });

    AngularData ad;
    auto add_angular = [&ad](CLI::App* sub) {
        sub->add_option("--two-j1", ad.twoJ1, "2*j1")->required();
        sub->add_option("--two-j2", ad.twoJ2, "2*j2")->required();
        sub->add_option("--two-j", ad.twoJ, "2*j")->required();
        sub->add_option("--two-m1", ad.twoM1, "2*m1")->required();
        sub->add_option("--two-m2", ad.twoM2, "2*m2")->required();
        sub->add_option("--two-m", ad.twoM, "2*m")->required();
    };
    auto* cg = app.add_subcommand("cg", "Clebsch-Gordan coefficient (sign and exact square)");
    add_angular(cg);
    cg->callback([&] { print_signed_square(ad, clebsch_gordan(ad)); });

    auto* wj = app.add_subcommand("3j", "Wigner 3j-symbol, single value or table");
    AngularData wd;
    int wj_max = 4;
    bool wj_table = false;
    wj->add_flag("--table", wj_table, "sweep all symbols with 2j <= max");
    wj->add_option("--max-two-j", wj_max, "table bound on 2*j1 and 2*j2 (default 4)");
    wj->add_option("--two-j1", wd.twoJ1, "2*j1");
    wj->add_option("--two-j2", wd.twoJ2, "2*j2");
    wj->add_option("--two-j", wd.twoJ, "2*j");
    wj->add_option("--two-m1", wd.twoM1, "2*m1");
    wj->add_option("--two-m2", wd.twoM2, "2*m2");
    wj->add_option("--two-m", wd.twoM, "2*m");
    wj->callback([&] {
        if (wj_table) {
            for (int j1 = 0; j1 <= wj_max; ++j1)
                for (int j2 = 0; j2 <= wj_max; ++j2)
                    for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2)
                        for (int m1 = -j1; m1 <= j1; m1 += 2)
                            for (int m2 = -j2; m2 <= j2; m2 += 2) {
                                int m = m1 + m2;
                                if (std::abs(m) > j) continue;
                                AngularData row{j1, j2, j, m1, m2, m};
                                print_signed_square(row, wigner_3j(row));
                            }
        } else {
            if (wj->count("--two-j1") + wj->count("--two-j2") + wj->count("--two-j") +
                    wj->count("--two-m1") + wj->count("--two-m2") + wj->count("--two-m") <
                6)
                throw std::invalid_argument("3j: give all six --two-* values or --table");
            print_signed_square(wd, wigner_3j(wd));
        }
    });

    // ---- covariants of binary forms ---------------------------------------
    auto* he = app.add_subcommand("hessian", "Hessian covariant of a binary form");
    std::string he_form;
    bool he_json = false;
    he->add_option("--form", he_form, "form (text format)")->required();
    he->add_flag("--json", he_json, "emit JSON");
    he->callback([&] { print_form(hessian(form_arg(he_form)), he_json); });

    auto* wr = app.add_subcommand("wronskian", "two-root covariant (Wronskian determinant)");
    std::string wr_form;
    bool wr_json = false;
    wr->add_option("--form", wr_form, "form (text format)")->required();
    wr->add_flag("--json", wr_json, "emit JSON");
    wr->callback([&] { print_form(wronskian_D(form_arg(wr_form)), wr_json); });

    auto* jq = app.add_subcommand("jpq", "numerator covariant of the quotient Hessian");
    std::string jq_p, jq_q;
    bool jq_json = false;
    jq->add_option("--p", jq_p, "numerator form")->required();
    jq->add_option("--q", jq_q, "denominator form")->required();
    jq->add_flag("--json", jq_json, "emit JSON");
    jq->callback([&] {
        print_form(j_quotient(form_arg(jq_p), form_arg(jq_q)), jq_json);
    });

    auto* ce = app.add_subcommand("ce", "locus covariant C_e");
    std::string ce_form;
    int ce_e = 1;
    bool ce_json = false;
    ce->add_option("--form", ce_form, "form (text format)")->required();
    ce->add_option("--e", ce_e, "split parameter")->required();
    ce->add_flag("--json", ce_json, "emit JSON");
    ce->callback([&] { print_form(c_e(form_arg(ce_form), ce_e), ce_json); });

    auto* mb = app.add_subcommand("member", "classify a form against the two-line loci");
    std::string mb_form;
    int mb_e = 1;
    mb->add_option("--form", mb_form, "form (text format)")->required();
    mb->add_option("--e", mb_e, "split parameter")->required();
    mb->callback([&] {
        BinaryForm f = form_arg(mb_form);
        MembershipReport r = membership(f, mb_e);
        ordered_json out{{"degree", f.degree()},
                         {"e", mb_e},
                         {"is_power_of_linear", r.is_power_of_linear},
                         {"in_Y", r.in_Y},
                         {"in_X_e", r.in_X_e},
                         {"hessian", to_string(r.he)},
                         {"wronskian", to_string(r.wronskian)},
                         {"c_e", to_string(r.ce)}};
        std::cout << out.dump() << '\n';
    });

    auto* qg = app.add_subcommand("quartic-gens",
                                  "paired iterated-transvectant generators evaluated on a form");
    std::string qg_form;
    int qg_e = 1;
    qg->add_option("--form", qg_form, "form (text format)")->required();
    qg->add_option("--e", qg_e, "split parameter")->required();
    qg->callback([&] {
        BinaryForm f = form_arg(qg_form);
        auto words = valid_words(f.degree());
        for (size_t a = 0; a < words.size(); ++a)
            for (size_t b = a + 1; b < words.size(); ++b) {
                if (words[a].weight() != words[b].weight()) continue;
                BinaryForm val = psi(f, words[a], words[b], qg_e);
                std::cout << words[a].i << '\t' << words[a].j << '\t' << words[a].k << '\t'
                          << words[b].i << '\t' << words[b].j << '\t' << words[b].k << '\t'
                          << words[a].weight() << '\t' << to_string(val) << '\n';
            }
    });

    // ---- integrand and case sweep -----------------------------------------
    auto* em = app.add_subcommand("emap", "integrand evaluation (closed form or brute force)");
    EParams ep;
    bool em_brute = false, em_closed = false, em_json = false;
    em->add_option("--d", ep.d)->required();
    em->add_option("--e", ep.e)->required();
    em->add_option("--r", ep.r)->required();
    em->add_option("--p", ep.p)->required();
    em->add_option("--pprime", ep.pprime)->required();
    em->add_flag("--brute", em_brute, "literal operator application");
    em->add_flag("--closed", em_closed, "closed-form evaluation (default)");
    em->add_flag("--json", em_json, "emit JSON");
    em->callback([&] {
        if (em_brute && em_closed)
            throw std::invalid_argument("emap: choose one of --brute / --closed");
        print_poly(em_brute ? e_bruteforce(ep) : e_closedform(ep), em_json);
    });

    auto* cs = app.add_subcommand("cases", "two-term case sweep as TSV");
    int cs_dmax = 8, cs_rmax = 5;
    cs->add_option("--dmax", cs_dmax, "largest degree")->required();
    cs->add_option("--rmax", cs_rmax, "largest level")->required();
    cs->callback([&] {
        for (const auto& row : verify_cases(cs_dmax, cs_rmax)) {
            const auto& res = row.result;
            std::cout << row.d << '\t' << row.e << '\t' << row.r << '\t' << row.pprime << '\t'
                      << res.case_id << '\t' << res.p << '\t' << res.bounds.L << '\t'
                      << res.bounds.H << '\t' << res.s_value.num().get_str() << '\t'
                      << res.s_value.den().get_str() << '\n';
        }
    });

    // ---- characters ---------------------------------------------------------
    auto* pl = app.add_subcommand("plethysm", "character of the symmetric power S_r(S_d)");
    int pl_r = 0, pl_d = 0;
    bool pl_json = false;
    pl->add_option("--r", pl_r)->required();
    pl->add_option("--d", pl_d)->required();
    pl->add_flag("--json", pl_json, "emit JSON");
    pl->callback([&] { print_character(plethysm(pl_r, pl_d), pl_json); });

    auto* ic = app.add_subcommand("ideal-char", "character of the degree-r piece of the ideal");
    int ic_d = 0, ic_e = 0, ic_r = 0;
    bool ic_json = false;
    ic->add_option("--d", ic_d)->required();
    ic->add_option("--e", ic_e)->required();
    ic->add_option("--r", ic_r)->required();
    ic->add_flag("--json", ic_json, "emit JSON");
    ic->callback([&] { print_character(ideal_character(ic_d, ic_e, ic_r), ic_json); });

    auto* m0 = app.add_subcommand("m0", "regularity bound");
    int m0_n = 1, m0_d = 0, m0_e = 0;
    m0->add_option("--n", m0_n)->required();
    m0->add_option("--d", m0_d)->required();
    m0->add_option("--e", m0_e)->required();
    m0->callback([&] { std::cout << regularity_m0(m0_n, m0_d, m0_e).get_str() << '\n'; });

    // ---- ternary concomitants ----------------------------------------------
    auto* tern = app.add_subcommand("ternary", "tableau concomitants of ternary forms");
    tern->require_subcommand(1);
    auto* te = tern->add_subcommand("eval", "evaluate a tableau concomitant on a form");
    std::string te_tab, te_file;
    int te_degree = 5;
    bool te_json = false;
    te->add_option("--tableau", te_tab, "rows of column counts, e.g. \"5,3,4,4|0,2,1,1\"")
        ->required();
    te->add_option("--form", te_file, "JSON form file: {\"degree\":5,\"terms\":[...]}")
        ->required();
    te->add_option("--degree", te_degree, "letter degree of the tableau (default 5)");
    te->add_flag("--json", te_json, "emit JSON");
    te->callback([&] {
        BracketMonomial mono = parse_tableau(parse_tableau_spec(te_tab, te_degree));
        print_poly(evaluate_monomial(mono, read_ternary_form(te_file)), te_json);
    });

    auto* tq = tern->add_subcommand("quintic-lists",
                                    "check both quintic generator lists on random split forms");
    unsigned te_seed = 1;
    int te_trials = 5;
    tq->add_option("--seed", te_seed, "random seed (default 1)");
    tq->add_option("--trials", te_trials, "number of random split quintics (default 5)");
    tq->callback([&] {
        QuinticReport rep = verify_quintic_lists(te_seed, te_trials);
        std::cout << "vanish_deg3\t" << (rep.vanish_deg3 ? "true" : "false") << '\n'
                  << "vanish_deg4\t" << (rep.vanish_deg4 ? "true" : "false") << '\n'
                  << "independent\t" << (rep.independent ? "true" : "false") << '\n'
                  << "ratio\t" << rep.ratio.first.get_str() << ':' << rep.ratio.second.get_str()
                  << '\n';
        for (const auto& f : rep.failures) std::cout << "failure\t" << f << '\n';
        if (!rep.ok()) exit_code = 1;
    });

    // ---- release gate --------------------------------------------------------
    auto* va = app.add_subcommand("verify-all", "run every acceptance check");
    bool va_quick = false;
    va->add_flag("--quick", va_quick, "reduced sweep bounds");
    va->callback([&] {
        bool all = true;
        for (const auto& r : run_all(va_quick)) {
            std::printf("%s %2d %-30s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.seconds, r.detail.c_str());
            std::fflush(stdout);
            all = all && r.pass;
        }
        if (!all) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return 1;
    }
}

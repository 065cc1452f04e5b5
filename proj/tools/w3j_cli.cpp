// Command-line surface: exact 3j evaluation, Regge views, zero census,
// Pell solvers, weight-1/weight-2 generators, Labarthe sums, hydrogenic
// expectation values, partitions.
//
// Exit codes: 0 success, 2 invalid arguments, 3 domain error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "w3j/census.hpp"
#include "w3j/errors.hpp"
#include "w3j/hydrogenic.hpp"
#include "w3j/hypergeom.hpp"
#include "w3j/labarthe.hpp"
#include "w3j/pell.hpp"
#include "w3j/threej.hpp"
#include "w3j/zeros.hpp"

using namespace w3j;

namespace {

// "7/2", "3.5", "-2", "4" -> HalfInt
HalfInt parse_half(const std::string& text) {
    std::string t = text;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    auto fail = [&] { throw CLI::ValidationError("not a half-integer: " + text); };
    long long twice = 0;
    if (auto slash = t.find('/'); slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (den != "2" && den != "1") fail();
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) fail();
        twice = std::stoll(num) * (den == "1" ? 2 : 1);
    } else if (auto dot = t.find('.'); dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (ip.find_first_not_of("0123456789") != std::string::npos) fail();
        if (fp != "0" && fp != "5" && fp != "00" && fp != "50") fail();
        twice = 2 * std::stoll(ip) + ((fp[0] == '5') ? 1 : 0);
    } else {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) fail();
        twice = 2 * std::stoll(t);
    }
    return HalfInt::from_twice(neg ? -twice : twice);
}

ThreeJ parse_symbol(const std::vector<std::string>& args) {
    ThreeJ s;
    s.a = parse_half(args[0]);
    s.b = parse_half(args[1]);
    s.c = parse_half(args[2]);
    s.alpha = parse_half(args[3]);
    s.beta = parse_half(args[4]);
    s.gamma = parse_half(args[5]);
    return s;
}

void print_value(const SqrtRational& v) {
    if (v.is_zero()) {
        std::cout << "exact: 0\nfloat: 0\n";
        return;
    }
    mpq_class sq = v.square();
    std::cout << "exact: " << (v.sign() < 0 ? "-" : "+") << "sqrt(" << sq.get_num().get_str()
              << "/" << sq.get_den().get_str() << ")\n";
    std::cout << "float: " << std::scientific << v.to_double() << "\n";
}

void print_square(const ReggeSquare& r) {
    for (int i = 0; i < 3; ++i)
        std::printf("  [%4lld %4lld %4lld]\n", r.r[i][0], r.r[i][1], r.r[i][2]);
}

int run(int argc, char** argv) {
    CLI::App app{"exact Wigner 3j toolkit: values, Regge symmetries, zero census"};
    app.require_subcommand(1);

    std::vector<std::string> sym;

    auto add_symbol_cmd = [&](const char* name, const char* desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("symbol", sym, "a b c alpha beta gamma (half-integers as 7/2 or 3.5)")
            ->expected(6);
        return c;
    };

    auto* eval = add_symbol_cmd("eval", "exact value of a 3j symbol");
    auto* regge = add_symbol_cmd("regge", "Regge square of a symbol");
    auto* orbit = add_symbol_cmd("orbit", "all 72 symmetry images with phases");
    auto* canon = add_symbol_cmd("canonical", "canonical (orbit-minimal) square");
    auto* classify_cmd = add_symbol_cmd("classify", "zero classification, degree, order");
    auto* forms = add_symbol_cmd("forms", "3F2 parameter sets and assembled values");
    auto* labarthe_cmd = add_symbol_cmd("labarthe", "L-pattern decompositions and value");

    auto* census_cmd = app.add_subcommand("census", "exhaustive polynomial-zero census");
    std::string maxj = "10";
    bool halfint = false;
    unsigned jobs = 1;
    std::string format = "table", outpath;
    long long dmin = -1, dmax = -1, omin = -1, omax = -1;
    census_cmd->add_option("--max-j", maxj, "J upper bound")->required();
    census_cmd->add_flag("--half-integers", halfint, "include half-integer momenta");
    census_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("--format", format, "jsonl | csv | table")
        ->check(CLI::IsMember({"jsonl", "csv", "table"}));
    census_cmd->add_option("--out", outpath, "output path (default stdout)");
    census_cmd->add_option("--min-degree", dmin, "keep records with degree >= this");
    census_cmd->add_option("--max-degree", dmax, "keep records with degree <= this");
    census_cmd->add_option("--min-order", omin, "keep records with order >= this");
    census_cmd->add_option("--max-order", omax, "keep records with order <= this");

    auto* pell_cmd = app.add_subcommand("pell", "Pell and Pell-like equations");
    std::string dstr;
    std::string nstr;
    bool negative = false;
    unsigned count = 5;
    pell_cmd->add_option("--d", dstr, "D in x^2 - D y^2")->required();
    pell_cmd->add_option("--n", nstr, "right-hand side N (fundamental class search)");
    pell_cmd->add_flag("--negative", negative, "solve x^2 - D y^2 = -1");
    pell_cmd->add_option("--count", count, "how many solutions to list");

    auto* w1 = app.add_subcommand("weight1", "weight-1 zero from (alpha,beta,gamma,delta)");
    std::string params;
    w1->add_option("--params", params, "alpha,beta,gamma,delta (positive integers)")->required();

    auto* w2 = app.add_subcommand("weight2", "weight-2 zeros for one (u1, u2)");
    long long u1 = 2, u2 = 2;
    std::string box = "40,40";
    w2->add_option("--u1", u1)->required();
    w2->add_option("--u2", u2)->required();
    w2->add_option("--box", box, "x1_max,x2_max for the Q = 0 scan");

    auto* hyd_cmd = app.add_subcommand("hydrogenic", "exact <r^k> for hydrogenic states");
    long hn = 1, hl = 0, hk = 0;
    hyd_cmd->add_option("--n", hn)->required();
    hyd_cmd->add_option("--l", hl)->required();
    hyd_cmd->add_option("--k", hk)->required();

    auto* part = app.add_subcommand("partitions", "partition count and estimate");
    long long pn = 0;
    part->add_option("--n", pn)->required();

    CLI11_PARSE(app, argc, argv);

    if (eval->parsed()) {
        ThreeJ s = parse_symbol(sym);
        std::cout << s.str() << "\n";
        print_value(racah_value(s));
    } else if (regge->parsed()) {
        print_square(to_regge(parse_symbol(sym)));
    } else if (orbit->parsed()) {
        ReggeSquare r = to_regge(parse_symbol(sym));
        for (const auto& [sq, ph] : symmetry_orbit(r))
            std::cout << (ph > 0 ? "+1 " : "-1 ") << sq.str() << "\n";
    } else if (canon->parsed()) {
        auto [sq, ph] = canonical_form(to_regge(parse_symbol(sym)));
        std::cout << "phase " << (ph > 0 ? "+1" : "-1") << "\n";
        print_square(sq);
    } else if (classify_cmd->parsed()) {
        ThreeJ s = parse_symbol(sym);
        auto c = zeros::classify(s);
        std::cout << "class: " << zeros::to_string(c.kind) << "\n";
        if (c.kind == zeros::ZeroKind::TrivialZero)
            std::cout << "reason: " << zeros::to_string(c.reason) << "\n";
        if (c.kind == zeros::ZeroKind::PolynomialZero) std::cout << "degree: " << c.degree << "\n";
        std::cout << "order: " << c.order << "\n";
    } else if (forms->parsed()) {
        ThreeJ s = parse_symbol(sym);
        std::cout << "racah " << racah_value(s).str() << "\n";
        for (const auto& f : vdW_forms(s)) {
            std::cout << "vdW (" << f.pqr[0] + 1 << f.pqr[1] + 1 << f.pqr[2] + 1
                      << ") " << f.params.str() << " -> ";
            try {
                std::cout << f.assemble().str() << "\n";
            } catch (const OutOfPhysicalDomain&) {
                std::cout << "(Gamma pole in prefactor)\n";
            }
        }
        ClassicForms cf = classic_forms(s);
        for (auto [name, p] : {std::pair<const char*, const F32Params*>{"wigner", &cf.wigner},
                               {"racah", &cf.racah},
                               {"majumdar", &cf.majumdar},
                               {"bandzaitis-yutsis", &cf.bandzaitis_yutsis}}) {
            std::cout << name << " " << p->str() << " -> ";
            try {
                std::cout << "series value " << eval_3f2_terminating(*p).get_str() << "\n";
            } catch (const domain_error& e) {
                std::cout << "(" << e.what() << ")\n";
            }
        }
    } else if (labarthe_cmd->parsed()) {
        ThreeJ s = parse_symbol(sym);
        auto decs = labarthe::decompose(s);
        for (const auto& d : decs) {
            std::cout << "n = (";
            for (int k = 0; k < 6; ++k) std::cout << d.n[k] << (k < 5 ? " " : ")");
            std::cout << "  p = " << d.p() << "\n";
        }
        std::cout << decs.size() << " decompositions\n";
        print_value(labarthe::labarthe_value(s));
    } else if (census_cmd->parsed()) {
        census::CensusConfig cfg;
        cfg.j_max = parse_half(maxj);
        cfg.include_half_integer = halfint;
        cfg.jobs = jobs;
        cfg.output_path = outpath;
        cfg.format = format == "jsonl"  ? census::Format::jsonl
                     : format == "csv" ? census::Format::csv
                                       : census::Format::table;
        if (dmin >= 0 || dmax >= 0)
            cfg.degree_filter = {{dmin >= 0 ? dmin : 0, dmax >= 0 ? dmax : 1000000}};
        if (omin >= 0 || omax >= 0)
            cfg.order_filter = {{omin >= 0 ? omin : -1, omax >= 0 ? omax : 1000000}};
        auto rep = census::run_census(cfg);
        census::write_report(rep, cfg);
        if (cfg.format != census::Format::table)
            std::cerr << "scanned " << rep.total_scanned << " symbols, "
                      << rep.records.size() << " canonical zeros, " << rep.seconds << " s\n";
    } else if (pell_cmd->parsed()) {
        mpz_class D(dstr);
        if (negative) {
            auto s = pell::negative_pell(D);
            std::cout << "necessary condition: "
                      << (pell::negative_pell_necessary_condition(D) ? "passes" : "fails") << "\n";
            if (s)
                std::cout << "fundamental: (" << s->x.get_str() << ", " << s->y.get_str() << ")\n";
            else
                std::cout << "no solution (odd period)\n";
        } else if (!nstr.empty() && mpz_class(nstr) != 1) {
            mpz_class N(nstr);
            auto sols = pell::pell_like(D, N);
            std::cout << sols.size() << " fundamental class(es), searched y <= "
                      << pell::pell_like_y_bound(D, N).get_str() << "\n";
            for (const auto& s : sols)
                std::cout << "(" << s.x.get_str() << ", " << s.y.get_str() << ")\n";
        } else {
            auto cf = pell::cf_sqrt(D);
            std::cout << "sqrt(" << D.get_str() << ") = [" << cf.a0.get_str() << "; ";
            for (size_t i = 0; i < cf.period.size(); ++i)
                std::cout << cf.period[i].get_str() << (i + 1 < cf.period.size() ? ", " : "");
            std::cout << " period]\n";
            for (const auto& s : pell::pell_solutions(D, count))
                std::cout << "(" << s.x.get_str() << ", " << s.y.get_str() << ")\n";
        }
    } else if (w1->parsed()) {
        long long v[4];
        if (std::sscanf(params.c_str(), "%lld,%lld,%lld,%lld", &v[0], &v[1], &v[2], &v[3]) != 4)
            throw CLI::ValidationError("--params wants alpha,beta,gamma,delta");
        zeros::Weight1Params p{v[0], v[1], v[2], v[3]};
        ReggeSquare r = zeros::weight1_from_params(p);
        print_square(r);
        ThreeJ s = from_regge(r);
        std::cout << s.str() << "\n";
        std::cout << "value " << racah_value(s).str() << "\n";
    } else if (w2->parsed()) {
        long long x1m, x2m;
        if (std::sscanf(box.c_str(), "%lld,%lld", &x1m, &x2m) != 2)
            throw CLI::ValidationError("--box wants x1_max,x2_max");
        zeros::Weight2Instance inst{u1, u2};
        auto prob = zeros::weight2_pell(inst);
        std::cout << "D = " << prob.D.get_str() << ", N = " << prob.N.get_str() << "\n";
        auto [s1, s2] = zeros::weight2_parametric(inst);
        std::cout << "parametric: (" << s1.x.get_str() << ", " << s1.y.get_str() << "), ("
                  << s2.x.get_str() << ", " << s2.y.get_str() << ")\n";
        for (const auto& rec : zeros::weight2_search(inst, x1m, x2m)) {
            ThreeJ s = from_regge(rec.canonical);
            std::cout << s.str() << "  J=" << rec.J << " degree=" << rec.degree
                      << " order=" << rec.order << "\n";
        }
    } else if (hyd_cmd->parsed()) {
        mpq_class v = hyd::r_k_expectation({hn, hl}, hk, hk == -1);
        std::cout << "<r^" << hk << "> = " << v.get_str() << " = " << v.get_d() << "\n";
    } else if (part->parsed()) {
        std::cout << "p(" << pn << ") = " << labarthe::partition_count(pn).get_str() << "\n";
        if (pn >= 1)
            std::cout << "hardy-ramanujan ~ " << labarthe::hardy_ramanujan_estimate(pn) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

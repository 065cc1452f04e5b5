// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance is exact (SqrtRational / rational equality); the only
// numeric thresholds are the Hardy-Ramanujan bounds and the wall-clock gate.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>
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

int g_failures = 0;

void report(int idx, bool ok, const char* what, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

unsigned pick_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : std::min(hw, 8u);
}

struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

ThreeJ random_physical(Rng& rng, long long j_max_twice) {
    for (;;) {
        long long A = rng.range(0, j_max_twice);
        long long B = rng.range(0, j_max_twice - A);
        long long clo = std::llabs(A - B), chi = std::min(A + B, j_max_twice - A - B);
        if (chi < clo) continue;
        long long C = clo + rng.range(0, (chi - clo) / 2) * 2;
        long long al = -A + 2 * rng.range(0, A);
        long long be = -B + 2 * rng.range(0, B);
        long long ga = -al - be;
        if (std::llabs(ga) > C) continue;
        return ThreeJ{half(A), half(B), half(C), half(al), half(be), half(ga)};
    }
}

// --- 1: cross-representation exactness, every physical symbol with J <= 15 ---
void criterion1() {
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
    auto triples = census::triangle_triples(HalfInt(15), true);
    std::atomic<unsigned long long> n_symbols{0};
    std::atomic<int> bad{0};
    census::parallel_shards(triples.size(), pick_jobs(), [&](size_t i) {
        census::for_each_projection(triples[i], [&](const ThreeJ& s) {
            n_symbols.fetch_add(1, std::memory_order_relaxed);
            SqrtRational v = racah_value(s);
            for (const auto& p : perms)
                if (!(series_representation(s, p) == v)) bad.fetch_add(1);
            if (!(labarthe::labarthe_value(s) == v)) bad.fetch_add(1);
            for (const auto& f : vdW_forms(s)) {
                try {
                    if (!(f.assemble() == v)) bad.fetch_add(1);
                } catch (const OutOfPhysicalDomain&) {
                    // Gamma pole in the prefactor: form undefined as printed
                }
            }
        });
    });
    std::ostringstream d;
    d << n_symbols.load() << " symbols x (racah, 6 series, labarthe, pole-free vdW), "
      << bad.load() << " mismatches";
    report(1, bad.load() == 0, "cross-representation exactness J <= 15", d.str());
}

// --- 2: symmetry covariance, 500 random symbols J <= 20 ---
void criterion2() {
    Rng rng(101);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        ThreeJ s = random_physical(rng, 40);
        SqrtRational v = racah_value(s);
        for (const auto& [sq, ph] : symmetry_orbit(to_regge(s)))
            if (!(racah_value(from_regge(sq)) == (ph < 0 ? -v : v))) ++bad;
    }
    report(2, bad == 0, "72-element orbit covariance, 500 random symbols J <= 20",
           bad ? std::to_string(bad) + " mismatches" : "36000 exact equalities");
}

// --- 3: order-0 closed forms J <= 30 and recurrence chain on 1000 symbols ---
void criterion3() {
    long long checked = 0;
    int bad = 0;
    for (long long A = 0; A <= 60; ++A)
        for (long long B = 0; A + B <= 60; ++B)
            for (long long C = std::llabs(A - B); C <= std::min(A + B, 60 - A - B); C += 2) {
                long long J2 = A + B + C;
                if (J2 % 2) continue;
                long long J = J2 / 2;
                auto probe = [&](long long al, long long be, long long ga) {
                    ThreeJ s{half(A), half(B), half(C), half(al), half(be), half(ga)};
                    auto rep = selection_check(s);
                    if (!rep.physical() || !rep.parity_ok) return;
                    SqrtRational v;
                    try {
                        v = order0_value(s);
                    } catch (const NotOrderZeroShape&) {
                        return;
                    }
                    ++checked;
                    if (v.is_zero() || !(v == racah_value(s))) ++bad;
                };
                if (J % 2 == 0) probe(0, 0, 0);
                probe(-1, 0, 1);
                if (J % 2 == 1) probe(0, 2, -2);
            }
    Rng rng(103);
    long long rec_done = 0;
    while (rec_done < 1000) {
        ThreeJ s = random_physical(rng, 60);
        try {
            if (!recurrence_identities(s)) ++bad;
            ++rec_done;
        } catch (const OutOfDomain&) {
        }
    }
    std::ostringstream d;
    d << checked << " closed-form shapes + " << rec_done << " recurrence chains, " << bad
      << " failures";
    report(3, bad == 0, "order-0 closed forms and recurrences", d.str());
}

// --- 4: Brudno families, weight-1 parametrization, weight-1 completeness ---
void criterion4() {
    int bad = 0;
    for (long long n = 1; n <= 50; ++n) {
        if (!racah_value(zeros::brudno_family(1, n)).is_zero()) ++bad;
        if (!racah_value(zeros::brudno_family(2, n)).is_zero()) ++bad;
    }
    for (long long a = 1; a <= 6; ++a)
        for (long long b = 1; b <= 6; ++b)
            for (long long g = 1; g <= 6; ++g)
                for (long long d = 1; d <= 6; ++d) {
                    ReggeSquare r = zeros::weight1_from_params({a, b, g, d});
                    if (!racah_value(from_regge(r)).is_zero()) ++bad;
                }
    census::CensusConfig cfg;
    cfg.j_max = HalfInt(30);
    cfg.include_half_integer = true;
    cfg.jobs = pick_jobs();
    auto rep = census::run_census(cfg);
    long long deg1 = 0;
    for (const auto& rec : rep.records) {
        if (rec.degree != 1) continue;
        ++deg1;
        try {
            zeros::Weight1Params p = zeros::weight1_factor(rec.canonical);
            ReggeSquare back = zeros::weight1_from_params(p);
            // reconstruction lands in the same orbit as the record
            if (!(canonical_form(back).first == rec.canonical)) ++bad;
        } catch (const domain_error&) {
            ++bad;
        }
    }
    std::ostringstream d;
    d << "100 Brudno zeros, 1296 parameter quadruples, " << deg1
      << " degree-1 census zeros factored, " << bad << " failures";
    report(4, bad == 0, "weight-1 structure (Brudno, Brudno-Louck, factorization)", d.str());
}

// --- 5: weight-2 / Pell consistency ---
void criterion5() {
    int bad = 0;
    for (long long u1 = 2; u1 <= 20; ++u1)
        for (long long u2 = 2; u2 <= 20; ++u2) {
            zeros::Weight2Instance w{u1, u2};
            auto prob = zeros::weight2_pell(w);
            auto [s1, s2] = zeros::weight2_parametric(w);
            if (s1.x * s1.x - prob.D * s1.y * s1.y != prob.N) ++bad;
            if (s2.x * s2.x - prob.D * s2.y * s2.y != prob.N) ++bad;
        }
    // every Q-zero in the box maps to an exact 3j zero
    long long qzeros = 0;
    for (long long u1 = 2; u1 <= 6; ++u1)
        for (long long u2 = 2; u2 <= 6; ++u2)
            for (long long x1 = u2; x1 <= 40; ++x1)
                for (long long x2 = 2; x2 <= 40; ++x2) {
                    if (zeros::weight2_Q(u1, u2, x1, x2) != 0) continue;
                    ++qzeros;
                    ThreeJ s = from_regge(zeros::weight2_regge(u1, u2, x1, x2));
                    if (!racah_value(s).is_zero()) ++bad;
                }
    // conversely: census degree-2 zeros whose orbit matches the array shape
    // (top-left 2, u1,u2 >= 2, x1 >= u2, x2 >= 2) sit on Q = 0
    census::CensusConfig cfg;
    cfg.j_max = HalfInt(27);
    cfg.include_half_integer = true;
    cfg.jobs = pick_jobs();
    auto rep = census::run_census(cfg);
    long long matched = 0;
    for (const auto& rec : rep.records) {
        if (rec.degree != 2) continue;
        bool shape_found = false, qzero = false;
        for (const auto& [sq, ph] : symmetry_orbit(rec.canonical)) {
            if (sq.r[0][0] != 2) continue;
            long long x1 = sq.r[0][1], x2 = sq.r[1][1], u1 = sq.r[2][1], u2 = sq.r[2][2];
            if (u1 < 2 || u2 < 2 || x1 < u2 || x2 < 2) continue;
            shape_found = true;
            if (zeros::weight2_Q(u1, u2, x1, x2) == 0) qzero = true;
        }
        if (shape_found) {
            ++matched;
            if (!qzero) ++bad;
        }
    }
    std::ostringstream d;
    d << "361 (u1,u2) identities, " << qzeros << " Q-zeros in the box, " << matched
      << " matching census zeros, " << bad << " failures";
    report(5, bad == 0, "weight-2 / Pell reduction consistency", d.str());
}

// --- 6: Pell module reference points ---
void criterion6() {
    int bad = 0;
    auto f9 = pell::pell_like(10, 9);
    auto has = [&](long x, long y) {
        for (const auto& s : f9)
            if (s.x == x && s.y == y) return true;
        return false;
    };
    if (!(has(7, 2) && has(13, 4) && has(57, 18))) ++bad;
    if (pell::negative_pell(34).has_value()) ++bad;
    if (!(pell::pell_fundamental(2) == pell::PellSolution{3, 2})) ++bad;
    for (long D = 2; D <= 50; ++D) {
        if (mpz_perfect_square_p(mpz_class(D).get_mpz_t())) continue;
        auto f = pell::pell_fundamental(D);
        auto st = pell::pell_solutions(D, 10);
        for (size_t n = 1; n <= st.size(); ++n) {
            if (st[n - 1].x != pell::chebyshev_T(n, f.x)) ++bad;
            if (st[n - 1].y != f.y * pell::chebyshev_U(n, f.x)) ++bad;
        }
        auto cf = pell::cf_sqrt(D);
        auto conv = pell::convergents(cf, 2 * cf.period.size() + 4);
        for (size_t n = 0; n < conv.size(); ++n) {
            mpz_class lhs = conv[n].x * conv[n].x - D * conv[n].y * conv[n].y;
            mpz_class rhs = cf.q_aux(n + 1);
            if (n % 2 == 0) rhs = -rhs;
            if (lhs != rhs) ++bad;
        }
    }
    report(6, bad == 0, "Pell module (fundamentals, negative Pell, Chebyshev, convergents)",
           bad ? std::to_string(bad) + " failures" : "D = 10/34/2 landmarks + D <= 50 sweeps");
}

// --- 7: Bryant-Jahn certificate against the exhaustive census J <= 40 ---
void criterion7() {
    census::CensusConfig cfg;
    cfg.j_max = HalfInt(40);
    cfg.include_half_integer = true;
    cfg.jobs = pick_jobs();
    auto rep = census::run_census(cfg);
    bool ok = census::verify_bryant_jahn(rep);
    std::ostringstream d;
    d << rep.total_scanned << " symbols, " << rep.records.size()
      << " canonical zeros, all with composite J+1: " << (ok ? "yes" : "NO");
    report(7, ok, "Bryant-Jahn: no polynomial zero with J+1 prime, J <= 40", d.str());
}

// --- 8: Bowick reference point at J <= 27 ---
void criterion8() {
    census::CensusConfig cfg;
    cfg.j_max = HalfInt(27);
    cfg.include_half_integer = true;
    cfg.jobs = pick_jobs();
    auto rep = census::run_census(cfg);
    bool ok = true;
    for (size_t i = 0; i < rep.records.size() && ok; ++i) {
        if (!racah_value(from_regge(rep.records[i].canonical)).is_zero()) ok = false;
        for (size_t j = i + 1; j < rep.records.size(); ++j)
            if (rep.records[i].canonical == rep.records[j].canonical) ok = false;
    }
    std::ostringstream d;
    d << "canonical zeros: " << rep.count_all() << ", reduced (deg >= 1, entries >= 1): "
      << rep.count_reduced() << " (literature reference figure: 39, convention-dependent); "
      << "100% re-verified, dedup clean: " << (ok ? "yes" : "NO");
    report(8, ok, "Bowick reference census J <= 27", d.str());
}

// --- 9: hydrogenic expectation values against the Laguerre oracle ---
mpq_class oracle_r_k(long n, long l, long k) {
    auto fac = [](long m) {
        mpz_class f = 1;
        for (long i = 2; i <= m; ++i) f *= i;
        return f;
    };
    auto binom = [](long m, long kk) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(kk));
        return b;
    };
    std::vector<mpq_class> c;
    for (long i = 0; i <= n - l - 1; ++i) {
        mpq_class v(binom(n + l, n - l - 1 - i), fac(i));
        if (i % 2) v = -v;
        c.push_back(v);
    }
    mpq_class integral = 0;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j)
            integral += c[i] * c[j] * mpq_class(fac(2 * l + 2 + k + static_cast<long>(i + j)));
    mpq_class norm(fac(n - l - 1), 2 * n * fac(n + l));
    mpq_class scale = 1;
    for (long t = 0; t < k; ++t) scale *= mpq_class(n, 2);
    mpq_class out = norm * scale * integral;
    out.canonicalize();
    return out;
}

void criterion9() {
    int bad = 0;
    long long cases = 0;
    for (long n = 1; n <= 10; ++n)
        for (long l = 0; l < n; ++l)
            for (long k = 0; k <= 5; ++k) {
                ++cases;
                if (hyd::r_k_expectation({n, l}, k) != oracle_r_k(n, l, k)) ++bad;
            }
    if (hyd::r_k_expectation({1, 0}, 1) != mpq_class(3, 2)) ++bad;
    if (hyd::r_k_expectation({2, 1}, 2) != 30) ++bad;
    std::ostringstream d;
    d << cases << " (n,l,k) states vs exact Laguerre integral, spot values 3/2 and 30, " << bad
      << " failures";
    report(9, bad == 0, "hydrogenic <r^k> exact rational equality", d.str());
}

// --- 10: partitions and the Hardy-Ramanujan estimate ---
void criterion10() {
    int bad = 0;
    if (labarthe::partition_count(100) != 190569292) ++bad;
    double err20 = 0, err200 = 0;
    for (long long n = 20; n <= 200; ++n) {
        double exact = mpz_get_d(labarthe::partition_count(n).get_mpz_t());
        double rel = std::fabs(labarthe::hardy_ramanujan_estimate(n) - exact) / exact;
        if (rel >= 0.15) ++bad;
        if (n == 20) err20 = rel;
        if (n == 200) err200 = rel;
    }
    if (!(err200 < err20)) ++bad;
    std::ostringstream d;
    char buf[128];
    std::snprintf(buf, sizeof buf, "p(100) exact; rel err %.3f at n=20 -> %.3f at n=200", err20,
                  err200);
    report(10, bad == 0, "partition function and Hardy-Ramanujan bound", buf);
}

// --- 11: determinism across jobs and the wall-clock gate ---
void criterion11() {
    census::CensusConfig cfg;
    cfg.j_max = HalfInt(20);
    cfg.include_half_integer = true;
    cfg.jobs = 1;
    auto t0 = std::chrono::steady_clock::now();
    auto r1 = census::run_census(cfg);
    double t_seq = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    cfg.jobs = 4;
    t0 = std::chrono::steady_clock::now();
    auto r4 = census::run_census(cfg);
    double t_par = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream j1, j4, c1, c4;
    census::write_jsonl(r1, j1);
    census::write_jsonl(r4, j4);
    census::write_csv(r1, c1);
    census::write_csv(r4, c4);
    bool identical = j1.str() == j4.str() && c1.str() == c4.str();
    bool fast = t_par < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "byte-identical jsonl+csv: %s; J <= 20 census %.2fs at jobs=4 (%.2fs at jobs=1, "
                  "speedup %.1fx)",
                  identical ? "yes" : "NO", t_par, t_seq, t_seq / (t_par > 0 ? t_par : 1));
    report(11, identical && fast, "determinism and performance gate", buf);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}

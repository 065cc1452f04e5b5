#include "w3j/pell.hpp"

#include <algorithm>
#include <cassert>

#include "w3j/errors.hpp"
#include "w3j/factorials.hpp"

namespace w3j::pell {

namespace {

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

void check_d(const mpz_class& D) {
    if (D < 2) throw PerfectSquare("D must be >= 2 and non-square, got " + D.get_str());
    if (is_square(D)) throw PerfectSquare("D = " + D.get_str() + " is a perfect square");
}

}  // namespace

mpz_class CFExpansion::a(size_t n) const {
    if (n == 0) return a0;
    return period[(n - 1) % period.size()];
}

mpz_class CFExpansion::q_aux(size_t n) const {
    if (n == 0) return 1;
    // Q has period m+1 = period.size() for n >= 1 and Q_{m+1} = 1 = Q_0.
    return Q[1 + (n - 1) % period.size()];
}

CFExpansion cf_sqrt(const mpz_class& D) {
    check_d(D);
    CFExpansion cf;
    cf.D = D;
    cf.a0 = isqrt(D);
    cf.P.push_back(0);
    cf.Q.push_back(1);
    // P1 = a0, Q1 = D - a0^2, a_n = floor((a0 + P_n)/Q_n)
    mpz_class P = cf.a0, Q = D - cf.a0 * cf.a0;
    mpz_class two_a0 = 2 * cf.a0;
    for (;;) {
        cf.P.push_back(P);
        cf.Q.push_back(Q);
        mpz_class a = (cf.a0 + P) / Q;
        cf.period.push_back(a);
        if (a == two_a0) break;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    return cf;
}

std::vector<PellSolution> convergents(const CFExpansion& cf, size_t count) {
    std::vector<PellSolution> out;
    out.reserve(count);
    mpz_class pm2 = 1, qm2 = 0;  // p_{-1} = 1, q_{-1} = 0
    mpz_class pm1 = cf.a0, qm1 = 1;
    if (count == 0) return out;
    out.push_back({pm1, qm1});
    for (size_t n = 1; n < count; ++n) {
        mpz_class an = cf.a(n);
        mpz_class p = an * pm1 + pm2;
        mpz_class q = an * qm1 + qm2;
        out.push_back({p, q});
        pm2 = pm1;
        qm2 = qm1;
        pm1 = p;
        qm1 = q;
    }
    return out;
}

PellSolution pell_fundamental(const mpz_class& D) {
    CFExpansion cf = cf_sqrt(D);
    size_t m = cf.m();
    size_t idx = (m % 2 == 1) ? m : 2 * m + 1;
    auto conv = convergents(cf, idx + 1);
    return conv[idx];
}

std::vector<PellSolution> pell_solutions(const mpz_class& D, size_t n) {
    PellSolution f = pell_fundamental(D);
    std::vector<PellSolution> out;
    out.reserve(n);
    mpz_class x = f.x, y = f.y;
    for (size_t i = 0; i < n; ++i) {
        out.push_back({x, y});
        mpz_class nx = f.x * x + D * f.y * y;
        mpz_class ny = f.y * x + f.x * y;
        x = nx;
        y = ny;
    }
    return out;
}

std::optional<PellSolution> negative_pell(const mpz_class& D) {
    CFExpansion cf = cf_sqrt(D);
    size_t m = cf.m();
    if (m % 2 == 1) return std::nullopt;
    auto conv = convergents(cf, m + 1);
    return conv[m];
}

bool negative_pell_necessary_condition(const mpz_class& D) {
    if (D % 4 == 0) return false;
    mpz_class m = D;
    while (m % 2 == 0) m /= 2;
    for (mpz_class p = 3; p * p <= m; p += 2) {
        if (m % p != 0) continue;
        if (p % 4 == 3) return false;
        while (m % p == 0) m /= p;
    }
    if (m > 1 && m % 4 == 3) return false;
    return true;
}

mpz_class pell_like_y_bound(const mpz_class& D, const mpz_class& N) {
    PellSolution f = pell_fundamental(D);
    // ceil(sqrt(|N|) * (x0 + y0*sqrt(D))), generously rounded up
    mpz_class absN = abs(N);
    mpz_class bound = (isqrt(absN) + 1) * (f.x + f.y * (isqrt(D) + 1));
    mpz_class floor10k = 10000;
    return std::max(bound, floor10k);
}

namespace {

// Nagell's criterion: (x,y) and (x',y') lie in the same class iff N divides
// both x x' - D y y' and x y' - y x'.
bool same_class(const PellSolution& u, const PellSolution& v, const mpz_class& D,
                const mpz_class& N) {
    mpz_class w1 = u.x * v.x - D * u.y * v.y;
    mpz_class w2 = u.x * v.y - u.y * v.x;
    return mpz_divisible_p(w1.get_mpz_t(), N.get_mpz_t()) &&
           mpz_divisible_p(w2.get_mpz_t(), N.get_mpz_t());
}

}  // namespace

std::vector<PellSolution> pell_like(const mpz_class& D, const mpz_class& N) {
    check_d(D);
    if (N == 0) return {};
    std::vector<PellSolution> candidates;
    if (abs(N) * abs(N) < D) {
        // |N| < sqrt(D): solutions exist iff N appears among the signed Q's;
        // read representatives off the convergent identities
        // p_n^2 - D q_n^2 = (-1)^(n+1) Q_{n+1} over two periods.
        CFExpansion cf = cf_sqrt(D);
        size_t span = 2 * cf.period.size() + 2;
        auto conv = convergents(cf, span);
        for (size_t n = 0; n < conv.size(); ++n) {
            mpz_class v = conv[n].x * conv[n].x - D * conv[n].y * conv[n].y;
            if (v == N) candidates.push_back(conv[n]);
        }
    } else {
        mpz_class ybound = pell_like_y_bound(D, N);
        for (mpz_class y = 1; y <= ybound; ++y) {
            mpz_class x2 = N + D * y * y;
            if (x2 <= 0 || !is_square(x2)) continue;
            candidates.push_back({isqrt(x2), y});
        }
    }
    // keep the least representative of each class (sorted by y, then x)
    std::sort(candidates.begin(), candidates.end(),
              [](const PellSolution& a, const PellSolution& b) {
                  return a.y < b.y || (a.y == b.y && a.x < b.x);
              });
    std::vector<PellSolution> fundamentals;
    for (const auto& c : candidates) {
        bool fresh = true;
        for (const auto& f : fundamentals)
            if (same_class(c, f, D, N)) {
                fresh = false;
                break;
            }
        if (fresh) fundamentals.push_back(c);
    }
    std::sort(fundamentals.begin(), fundamentals.end(),
              [](const PellSolution& a, const PellSolution& b) { return a.x < b.x; });
    return fundamentals;
}

PellSolution brahmagupta_compose(const PellSolution& s, const PellSolution& t, const mpz_class& D,
                                 int sign) {
    assert(sign == 1 || sign == -1);
    if (sign > 0) return {s.x * t.x + D * s.y * t.y, s.x * t.y + s.y * t.x};
    return {s.x * t.x - D * s.y * t.y, s.x * t.y - s.y * t.x};
}

mpz_class chebyshev_T(size_t n, const mpz_class& x) {
    mpz_class tm1 = 1, t = x;  // T_0, T_1
    if (n == 0) return tm1;
    for (size_t i = 1; i < n; ++i) {
        mpz_class next = 2 * x * t - tm1;
        tm1 = t;
        t = next;
    }
    return t;
}

mpz_class chebyshev_U(size_t n, const mpz_class& x) {
    // Schur: U_n = U^{classical}_{n-1}; U_0 = 0, U_1 = 1.
    mpz_class um1 = 0, u = 1;
    if (n == 0) return um1;
    for (size_t i = 1; i < n; ++i) {
        mpz_class next = 2 * x * u - um1;
        um1 = u;
        u = next;
    }
    return u;
}

bool is_powerful(const mpz_class& n) {
    if (n < 1) throw OutOfDomain("is_powerful needs n >= 1");
    if (n == 1) return true;
    mpz_class m = n;
    for (long p : fact::primes_upto(100000)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            long e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
                ++e;
            }
            if (e < 2) return false;
        }
        if (m == 1) return true;
    }
    // rough cofactor with no prime <= 1e5: powerful iff it is a perfect
    // square or a higher perfect power (covers sizes reachable here)
    return mpz_perfect_square_p(m.get_mpz_t()) || mpz_perfect_power_p(m.get_mpz_t());
}

std::vector<std::pair<mpz_class, mpz_class>> powerful_pairs_type1(size_t count) {
    // x^2 - 8y^2 = 1: the pair (8y^2, x^2) is consecutive, 8y^2 = 2^3 y^2 is
    // powerful, and x^2 is the required perfect square.
    auto sols = pell_solutions(8, count);
    std::vector<std::pair<mpz_class, mpz_class>> out;
    out.reserve(count);
    for (const auto& s : sols) out.emplace_back(8 * s.y * s.y, s.x * s.x);
    return out;
}

}  // namespace w3j::pell

#include "w3j/labarthe.hpp"

#include <cassert>
#include <cmath>
#include <mutex>

#include "w3j/errors.hpp"
#include "w3j/factorials.hpp"

namespace w3j::labarthe {

LPattern LPattern::operator+(const LPattern& o) const {
    LPattern r;
    for (int i = 0; i < 3; ++i) {
        r.top[i] = top[i] + o.top[i];
        r.bottom[i] = bottom[i] + o.bottom[i];
    }
    return r;
}

LPattern LPattern::scaled(long long k) const {
    LPattern r;
    for (int i = 0; i < 3; ++i) {
        r.top[i] = HalfInt::from_twice(top[i].twice * k);
        r.bottom[i] = HalfInt::from_twice(bottom[i].twice * k);
    }
    return r;
}

LPattern pattern_of(const ThreeJ& s) {
    return LPattern{{s.a, s.b, s.c}, {s.alpha, s.beta, s.gamma}};
}

const std::array<LPattern, 6>& primitive_patterns() {
    static const std::array<LPattern, 6> e = {{
        {{half(0), half(1), half(1)}, {half(0), half(1), half(-1)}},   // e1
        {{half(1), half(0), half(1)}, {half(-1), half(0), half(1)}},   // e2
        {{half(1), half(1), half(0)}, {half(1), half(-1), half(0)}},   // e3
        {{half(0), half(1), half(1)}, {half(0), half(-1), half(1)}},   // e4
        {{half(1), half(0), half(1)}, {half(1), half(0), half(-1)}},   // e5
        {{half(1), half(1), half(0)}, {half(-1), half(1), half(0)}},   // e6
    }};
    return e;
}

std::vector<LDecomposition> decompose(const ThreeJ& s) {
    std::vector<LDecomposition> out;
    SelectionReport rep = selection_check(s);
    if (!rep.physical()) return out;
    if (!(s.a + s.alpha).is_integer() || !(s.b + s.beta).is_integer() ||
        !(s.c + s.gamma).is_integer())
        return out;
    // n5 range and the five linear relations; everything in doubled units
    // divided by 2 (all combinations below are integers for valid symbols).
    long long lo2 = std::max({(s.a - s.c + s.beta).twice, (s.b - s.c - s.alpha).twice, 0LL});
    long long hi2 = std::min({(s.a + s.b - s.c).twice, (s.b + s.beta).twice,
                              (s.a - s.alpha).twice});
    for (long long n5t = lo2; n5t <= hi2; n5t += 2) {
        long long n5 = n5t / 2;
        LDecomposition d;
        d.n[0] = (s.a + s.b - s.c).as_integer() - n5;
        d.n[1] = (s.b + s.beta).as_integer() - n5;
        d.n[2] = (s.a - s.alpha).as_integer() - n5;
        d.n[3] = (s.c - s.b + s.alpha).as_integer() + n5;
        d.n[4] = n5;
        d.n[5] = (s.c - s.a - s.beta).as_integer() + n5;
        bool ok = true;
        for (long long v : d.n) ok = ok && v >= 0;
        if (ok) out.push_back(d);
    }
    return out;
}

LPattern decomposed_pattern(const ThreeJ& s) {
    ReggeSquare R = to_regge(s);
    LPattern p;
    for (int k = 0; k < 3; ++k) {
        p.top[k] = half(R.r[0][k] + R.r[1][k]);
        p.bottom[k] = half(R.r[1][k] - R.r[0][k]);
    }
    return p;
}

namespace {

// Q = 1/sqrt(T_abc T^- T^+) = Delta(abc) * sqrt(prod (j +- m)!), as a
// factored radicand.
SqrtRational labarthe_Q(const ThreeJ& s, int sign, const mpq_class& coeff) {
    ReggeSquare R = to_regge(s);
    FactoredFactorial f;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) f *= fact::factored(R.r[i][k]);
    f /= fact::factored(R.J() + 1);
    return SqrtRational::of_factored(sign < 0 ? mpq_class(-coeff) : coeff, f.e);
}

}  // namespace

SqrtRational labarthe_value(const ThreeJ& s) {
    auto decs = decompose(s);
    if (decs.empty()) return SqrtRational{};
    mpq_class sum = 0;
    for (const auto& d : decs) {
        mpz_class den = 1;
        long long mx = 0;
        for (long long v : d.n) mx = std::max(mx, v);
        fact::ensure(mx);
        for (long long v : d.n) den *= fact::factorial(v);
        mpq_class term(1, den);
        if (d.p() % 2) term = -term;
        sum += term;
    }
    sum.canonicalize();
    if (sum == 0) return SqrtRational{};
    return labarthe_Q(s, sgn(sum), abs(sum));
}

SingleSum single_sum_reduction(const ThreeJ& s) {
    SingleSum out;
    auto decs = decompose(s);
    if (decs.empty()) return out;
    out.lo = decs.front().n[4];
    out.hi = decs.back().n[4];
    long long phase0 = (s.a - s.b - s.gamma).as_integer();
    for (const auto& d : decs) {
        mpz_class den = 1;
        for (long long v : d.n) den *= fact::factorial(v);
        mpq_class term(1, den);
        term.canonicalize();
        if ((phase0 + d.n[4]) % 2) term = -term;
        out.terms.push_back(term);
    }
    return out;
}

bool weight1_condition_via_patterns(long long x, long long y, long long u, long long v) {
    if (x < 1 || y < 1 || u < 1 || v < 1) throw OutOfDomain("arguments must be positive");
    // The weight-1 pattern decomposes as v e1 + x e2 + e3 + (y-1) e4 + (u-1) e5;
    // eliminating e3 and applying the alternating-sum identity leaves a
    // two-term sum whose vanishing is the Diophantine condition vx = uy.
    // Evaluated here through the actual decompositions of the symbol.
    ReggeSquare r;
    r.r = {{{1, y + v - 1, x + u - 1}, {u + v - 1, x, y}, {x + y - 1, u, v}}};
    ThreeJ s = from_regge(r);
    mpq_class sum = 0;
    for (const auto& d : decompose(s)) {
        mpz_class den = 1;
        for (long long nv : d.n) den *= fact::factorial(nv);
        mpq_class term(1, den);
        if (d.p() % 2) term = -term;
        sum += term;
    }
    return sum == 0;
}

namespace {
std::mutex g_pmutex;
std::vector<mpz_class> g_partitions;  // p(0), p(1), ...
}  // namespace

mpz_class partition_count(long long n) {
    if (n < 0) throw OutOfDomain("partition_count needs n >= 0");
    std::lock_guard<std::mutex> lk(g_pmutex);
    if (g_partitions.empty()) g_partitions.emplace_back(1);
    // Euler's pentagonal recurrence
    while (static_cast<long long>(g_partitions.size()) <= n) {
        long long m = static_cast<long long>(g_partitions.size());
        mpz_class p = 0;
        for (long long k = 1;; ++k) {
            long long g1 = k * (3 * k - 1) / 2;
            long long g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2) ? 1 : -1;
            if (g1 <= m) p += sign * g_partitions[static_cast<size_t>(m - g1)];
            if (g2 <= m) p += sign * g_partitions[static_cast<size_t>(m - g2)];
        }
        g_partitions.push_back(p);
    }
    return g_partitions[static_cast<size_t>(n)];
}

double hardy_ramanujan_estimate(long long n) {
    if (n < 1) throw OutOfDomain("hardy_ramanujan_estimate needs n >= 1");
    double x = static_cast<double>(n);
    return std::exp(M_PI * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace w3j::labarthe

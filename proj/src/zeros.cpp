#include "w3j/zeros.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "w3j/errors.hpp"

namespace w3j::zeros {

const char* to_string(ZeroKind k) {
    switch (k) {
        case ZeroKind::NonZero: return "nonzero";
        case ZeroKind::TrivialZero: return "trivial";
        case ZeroKind::PolynomialZero: return "polynomial";
    }
    return "?";
}

const char* to_string(TrivialReason r) {
    switch (r) {
        case TrivialReason::None: return "none";
        case TrivialReason::ProjectionSum: return "projection-sum";
        case TrivialReason::Triangle: return "triangle";
        case TrivialReason::Range: return "range";
        case TrivialReason::Parity: return "parity";
        case TrivialReason::OddJSymmetry: return "odd-j-symmetry";
    }
    return "?";
}

ZeroClassification classify(const ThreeJ& s) {
    ZeroClassification out;
    SelectionReport rep = selection_check(s);
    if (!rep.projections_sum_zero) {
        out.kind = ZeroKind::TrivialZero;
        out.reason = TrivialReason::ProjectionSum;
        return out;
    }
    if (!rep.triangle_ok) {
        out.kind = ZeroKind::TrivialZero;
        out.reason = TrivialReason::Triangle;
        return out;
    }
    if (!rep.projections_in_range) {
        out.kind = ZeroKind::TrivialZero;
        out.reason = TrivialReason::Range;
        return out;
    }
    if (!(s.a + s.alpha).is_integer() || !(s.b + s.beta).is_integer() ||
        !(s.c + s.gamma).is_integer()) {
        out.kind = ZeroKind::TrivialZero;
        out.reason = TrivialReason::Parity;
        return out;
    }
    if (!racah_is_zero(s)) {
        out.kind = ZeroKind::NonZero;
        out.order = raynal_order(s);
        return out;
    }
    ReggeSquare r = to_regge(s);
    if (symmetry_forced_zero(r)) {
        out.kind = ZeroKind::TrivialZero;
        out.reason = TrivialReason::OddJSymmetry;
        return out;
    }
    out.kind = ZeroKind::PolynomialZero;
    out.degree = degree(r);
    out.order = raynal_order(s);
    return out;
}

ZeroRecord make_record(const ThreeJ& s, const std::string& generator) {
    ReggeSquare r = to_regge(s);
    ZeroRecord rec;
    rec.canonical = canonical_form(r).first;
    rec.J = r.J();
    rec.degree = degree(r);
    rec.order = raynal_order(s);
    rec.generator = generator;
    return rec;
}

ReggeSquare weight1_regge(long long x, long long y, long long u, long long v) {
    if (x < 1 || y < 1 || u < 1 || v < 1) throw NotAZero("weight-1 entries must be positive");
    if (v * x != u * y)
        throw NotAZero("vx != uy for (x,y,u,v) = (" + std::to_string(x) + "," + std::to_string(y) +
                       "," + std::to_string(u) + "," + std::to_string(v) + ")");
    ReggeSquare r;
    r.r = {{{1, y + v - 1, x + u - 1}, {u + v - 1, x, y}, {x + y - 1, u, v}}};
    assert(r.is_magic());
    return r;
}

ReggeSquare weight1_from_params(const Weight1Params& p) {
    return weight1_regge(p.alpha * p.beta, p.beta * p.delta, p.alpha * p.gamma,
                         p.gamma * p.delta);
}

namespace {

// Reads (x, y, u, v) out of a square arranged with 1 at the top-left; the
// magic property forces the remaining border entries.
bool read_weight1(const ReggeSquare& r, long long& x, long long& y, long long& u, long long& v) {
    if (r.r[0][0] != 1) return false;
    x = r.r[1][1];
    y = r.r[1][2];
    u = r.r[2][1];
    v = r.r[2][2];
    return x >= 1 && y >= 1 && u >= 1 && v >= 1 && v * x == u * y;
}

bool try_factor(long long x, long long y, long long u, long long v, long long a,
                Weight1Params& out) {
    if (x % a || u % a) return false;
    long long b = x / a, g = u / a;
    if (y % b || v % g) return false;
    long long d = y / b;
    if (v / g != d) return false;
    out = {a, b, g, d};
    return true;
}

}  // namespace

Weight1Params weight1_factor(const ReggeSquare& r) {
    if (r.min_entry() != 1) throw NoUnitEntry("least entry of " + r.str() + " is not 1");
    long long x, y, u, v;
    ReggeSquare arranged = r;
    if (!read_weight1(arranged, x, y, u, v)) {
        // bring some unit entry to the top-left; orbit order makes it deterministic
        bool found = false;
        for (const auto& [sq, ph] : symmetry_orbit(r)) {
            if (read_weight1(sq, x, y, u, v)) {
                arranged = sq;
                found = true;
                break;
            }
        }
        if (!found) throw NotAZero("no arrangement of " + r.str() + " satisfies vx = uy");
    }
    Weight1Params p;
    if (try_factor(x, y, u, v, std::gcd(x, u), p)) return p;
    for (long long a = std::gcd(x, u); a >= 1; --a)
        if (std::gcd(x, u) % a == 0 && try_factor(x, y, u, v, a, p)) return p;
    throw FactorizationFailed("no (alpha,beta,gamma,delta) factorization of (" +
                              std::to_string(x) + "," + std::to_string(y) + "," +
                              std::to_string(u) + "," + std::to_string(v) + ")");
}

ThreeJ brudno_family(int which, long long n) {
    if (n < 1) throw OutOfDomain("brudno_family needs n >= 1");
    if (which == 1)
        return ThreeJ{HalfInt(3 * n), HalfInt(2 * n + 1), HalfInt(n + 1),
                      HalfInt(3 * n - 1), HalfInt(-2 * n), HalfInt(1 - n)};
    if (which == 2)
        return ThreeJ{HalfInt(2 * n + 1), HalfInt(2 * n), HalfInt(2),
                      HalfInt(n + 1), HalfInt(-n), HalfInt(-1)};
    throw OutOfDomain("brudno_family: which must be 1 or 2");
}

bool lindner_criterion(const ReggeSquare& r) {
    bool any_unit = false;
    bool all_vanish = true, any_vanish = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (r.r[i][j] != 1) continue;
            any_unit = true;
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            long long minor = r.r[i1][j1] * r.r[i2][j2] - r.r[i1][j2] * r.r[i2][j1];
            if (minor == 0)
                any_vanish = true;
            else
                all_vanish = false;
        }
    if (!any_unit) throw NoUnitEntry("no entry of " + r.str() + " equals 1");
    // Unit entries agree: either all minors vanish or none does.
    assert(any_vanish == all_vanish);
    return any_vanish;
}

mpz_class weight2_Q(long long u1, long long u2, long long x1, long long x2) {
    mpz_class U1(static_cast<long>(u1)), U2(static_cast<long>(u2));
    mpz_class X1(static_cast<long>(x1)), X2(static_cast<long>(x2));
    return 2 * U1 * (U1 - 1) * (X1 - U2 + 1) * (X1 - U2 + 2) - 4 * U1 * U2 * (X1 - U2 + 2) * X2 +
           2 * U2 * (U2 - 1) * X2 * (X2 - 1);
}

ReggeSquare weight2_regge(long long u1, long long u2, long long x1, long long x2) {
    ReggeSquare r;
    r.r = {{{2, x1, x2 + u1 - 2},
            {u1 + u2 - 2, x2, x1 - u2 + 2},
            {x1 + x2 - u2, u1, u2}}};
    for (const auto& row : r.r)
        for (long long v : row)
            if (v < 0) throw NotPhysical("negative entry in weight-2 array");
    assert(r.is_magic());
    return r;
}

pell::PellProblem weight2_pell(const Weight2Instance& w) {
    mpz_class U1(static_cast<long>(w.u1)), U2(static_cast<long>(w.u2));
    pell::PellProblem p;
    p.D = U1 * U2 * (U1 + U2 - 1);
    p.N = -U1 * (U1 - 1) * (U1 - 1) * (U2 - 1) * (U1 + U2);
    return p;
}

std::pair<pell::PellSolution, pell::PellSolution> weight2_parametric(const Weight2Instance& w) {
    mpz_class U1(static_cast<long>(w.u1)), U2(static_cast<long>(w.u2));
    pell::PellSolution s1{U1 * (U1 - 1), U1 - 1};
    pell::PellSolution s2{U1 * (U1 + 2 * U2 - 1), U1 + 1};
    return {s1, s2};
}

std::vector<ZeroRecord> weight2_search(const Weight2Instance& w, long long x1_max,
                                       long long x2_max) {
    if (w.u1 < 2 || w.u2 < 2) throw OutOfDomain("weight-2 domain needs u1, u2 >= 2");
    std::vector<ZeroRecord> out;
    for (long long x1 = w.u2; x1 <= x1_max; ++x1)
        for (long long x2 = 2; x2 <= x2_max; ++x2) {
            if (weight2_Q(w.u1, w.u2, x1, x2) != 0) continue;
            ReggeSquare r = weight2_regge(w.u1, w.u2, x1, x2);
            ThreeJ s = from_regge(r);
            if (!racah_is_zero(s))
                throw domain_error("Q = 0 point is not a 3j zero: " + s.str());
            out.push_back(make_record(s, "weight2"));
        }
    return out;
}

}  // namespace w3j::zeros

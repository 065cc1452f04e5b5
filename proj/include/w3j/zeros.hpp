#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "w3j/pell.hpp"
#include "w3j/threej.hpp"

namespace w3j::zeros {

enum class ZeroKind { NonZero, TrivialZero, PolynomialZero };

enum class TrivialReason {
    None,
    ProjectionSum,   // alpha + beta + gamma != 0
    Triangle,        // triangle inequality (or J integrality) fails
    Range,           // some |projection| exceeds its momentum
    Parity,          // mismatched (j, m) parities
    OddJSymmetry,    // fixed by a symmetry carrying (-1)^J with J odd
};

struct ZeroClassification {
    ZeroKind kind = ZeroKind::NonZero;
    TrivialReason reason = TrivialReason::None;
    long long degree = -1;  // min Regge entry; PolynomialZero only
    long long order = -1;   // Raynal order
};

ZeroClassification classify(const ThreeJ& s);

const char* to_string(ZeroKind k);
const char* to_string(TrivialReason r);

// One census/generator row: canonical Regge square plus its classification.
struct ZeroRecord {
    ReggeSquare canonical;
    long long J = 0;
    long long degree = 0;
    long long order = 0;
    std::string generator;  // census | weight1 | weight2 | order1 | brudno

    bool operator==(const ZeroRecord&) const = default;
};

ZeroRecord make_record(const ThreeJ& s, const std::string& generator);

// ---- weight-1 zeros ----

struct Weight1Params {
    long long alpha = 1, beta = 1, gamma = 1, delta = 1;
    bool operator==(const Weight1Params&) const = default;
};

// The magic square [1, y+v-1, x+u-1; u+v-1, x, y; x+y-1, u, v]; requires the
// zero condition vx = uy.  Throws NotAZero otherwise.
ReggeSquare weight1_regge(long long x, long long y, long long u, long long v);

// weight1_regge(alpha*beta, beta*delta, alpha*gamma, gamma*delta); the zero
// condition holds identically.
ReggeSquare weight1_from_params(const Weight1Params& p);

// Brudno-Louck factorization of a weight-1 zero square: the gcd-canonical
// choice, with a divisor-search fallback.  Throws FactorizationFailed when no
// factorization exists (and NotAZero / NoUnitEntry for malformed input).
Weight1Params weight1_factor(const ReggeSquare& r);

// The two one-parameter Brudno families of weight-1 zeros.
ThreeJ brudno_family(int which, long long n);

// True iff the 2x2 algebraic minor of a unit entry vanishes; equivalent to
// the symbol being a zero when the square's least entry is 1.
bool lindner_criterion(const ReggeSquare& r);  // throws NoUnitEntry

// ---- weight-2 zeros (Louck-Stein) ----

struct Weight2Instance {
    long long u1 = 2, u2 = 2;
};

// Q_{u1,u2}(x1,x2); vanishes exactly on the weight-2 zeros within the domain
// u1,u2 >= 2, x1 >= u2, x2 >= 2.
mpz_class weight2_Q(long long u1, long long u2, long long x1, long long x2);

// [2, x1, x2+u1-2; u1+u2-2, x2, x1-u2+2; x1+x2-u2, u1, u2]; throws NotPhysical
// when an entry is negative.
ReggeSquare weight2_regge(long long u1, long long u2, long long x1, long long x2);

pell::PellProblem weight2_pell(const Weight2Instance& w);

// The two printed parametric solutions (u1(u1-1), u1-1) and
// (u1(u1+2u2-1), u1+1) of x^2 - D y^2 = N.
std::pair<pell::PellSolution, pell::PellSolution> weight2_parametric(const Weight2Instance& w);

// All Q = 0 points in the box u1/u2 fixed, u2 <= x1 <= x1_max, 2 <= x2 <=
// x2_max, assembled into verified records (racah_value = 0 asserted).
std::vector<ZeroRecord> weight2_search(const Weight2Instance& w, long long x1_max,
                                       long long x2_max);

}  // namespace w3j::zeros

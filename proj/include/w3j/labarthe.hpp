#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "w3j/sqrt_rational.hpp"
#include "w3j/threej.hpp"

namespace w3j::labarthe {

// 2x3 half-integer pattern: top row angular momenta, bottom row projections.
struct LPattern {
    std::array<HalfInt, 3> top;
    std::array<HalfInt, 3> bottom;
    bool operator==(const LPattern&) const = default;

    LPattern operator+(const LPattern& o) const;
    LPattern scaled(long long k) const;
};

LPattern pattern_of(const ThreeJ& s);
// The six primitive patterns e1..e6 (index 0..5).
const std::array<LPattern, 6>& primitive_patterns();

// Non-negative multiplicities n1..n6 with sum(n_k e_k) = pattern(s).
struct LDecomposition {
    std::array<long long, 6> n{};
    long long p() const { return n[3] + n[4] + n[5]; }
    long long total() const { return n[0] + n[1] + n[2] + n[3] + n[4] + n[5]; }
    bool operator==(const LDecomposition&) const = default;
};

// All decompositions, parameterized by n5 over its admissible range; empty
// when the symbol has none (non-physical shapes).
std::vector<LDecomposition> decompose(const ThreeJ& s);

// The pattern that sum(n_k e_k) reproduces for decompose(s): the L-pattern of
// the cyclic row image (rows 3,1,2) of the Regge square, which shares the
// symbol's value.  Component-wise: top_k = (R1k+R2k)/2, bottom_k = (R2k-R1k)/2.
LPattern decomposed_pattern(const ThreeJ& s);

// Labarthe sum Q * sum (-1)^p / (n1! ... n6!); equals racah_value exactly.
SqrtRational labarthe_value(const ThreeJ& s);

// The reduced single sum: n5 bounds and the signed term sequence
// (-1)^(a-b-gamma+n5) / prod n_k!.  Term-by-term this matches the Racah sum
// terms up to the constant global phase (-1)^(a-b-gamma).
struct SingleSum {
    long long lo = 0, hi = -1;
    std::vector<mpq_class> terms;
};
SingleSum single_sum_reduction(const ThreeJ& s);

// vx = uy, derived by pushing (v-1)e1 + (x-1)e2 + y e4 + u e5 through the
// alternating-sum identity.
bool weight1_condition_via_patterns(long long x, long long y, long long u, long long v);

mpz_class partition_count(long long n);
double hardy_ramanujan_estimate(long long n);

}  // namespace w3j::labarthe

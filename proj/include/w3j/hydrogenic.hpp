#pragma once

#include <gmpxx.h>

#include "w3j/sqrt_rational.hpp"

namespace w3j::hyd {

struct HydrogenicState {
    long n = 1;  // principal quantum number >= 1
    long l = 0;  // 0 <= l <= n-1
};

// Exact <r^k> in atomic units via the terminating 3F2 form
//   (n^(k-1)/2^(k+1)) ((n+l+k+1)!/(n+l)!) 3F2(-k-1,-k-1,l+1-n; 1,-n-l-k-1; 1).
// k = -1 is accepted only with allow_negative_k (validated against the
// Laguerre-integral oracle); deeper negative powers are out of scope.
mpq_class r_k_expectation(const HydrogenicState& st, long k, bool allow_negative_k = false);

// The shared 3F2 of the off-diagonal connection:
//   3F2(l+l'-k, l-l'-k-1, -k-1; n+l-k, -2k-2; 1).
mpq_class shared_3f2(long n, long l, long lp, long k);

// f^k_{l,l'} = sqrt((k+1-D)!(k+1+D)!(l+l'+k+2)! / ((k+1)!)^2 (l+l'-k-1)!),
// D = l-l' >= 0.  Throws OutOfDomain on negative factorial arguments.
SqrtRational f_factor(long l, long lp, long k);

}  // namespace w3j::hyd

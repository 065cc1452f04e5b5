#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace w3j::pell {

struct PellProblem {
    mpz_class D;
    mpz_class N;
};

struct PellSolution {
    mpz_class x, y;
    bool operator==(const PellSolution&) const = default;
};

// Continued fraction of sqrt(D): a0 followed by the period a1..a_{m+1} with
// a_{m+1} = 2*a0.  P/Q are the auxiliary sequences, stored for indices
// 0..m+1; Q is periodic with period m+1 beyond that.
struct CFExpansion {
    mpz_class D;
    mpz_class a0;
    std::vector<mpz_class> period;  // a1 .. a_{m+1}
    std::vector<mpz_class> P, Q;    // indices 0 .. m+1

    size_t m() const { return period.size() - 1; }
    // a_n for n >= 0 (periodic continuation).
    mpz_class a(size_t n) const;
    // Q_n for n >= 0 (periodic continuation, Q_0 = 1).
    mpz_class q_aux(size_t n) const;
};

CFExpansion cf_sqrt(const mpz_class& D);  // throws PerfectSquare (or D < 2)

// Convergents p_n/q_n of sqrt(D), n = 0..count-1.
std::vector<PellSolution> convergents(const CFExpansion& cf, size_t count);

PellSolution pell_fundamental(const mpz_class& D);                       // x^2-Dy^2 = 1
std::vector<PellSolution> pell_solutions(const mpz_class& D, size_t n);  // first n, increasing
std::optional<PellSolution> negative_pell(const mpz_class& D);           // x^2-Dy^2 = -1

// Classical necessary condition for negative-Pell solvability: D not
// divisible by 4 and no odd prime factor congruent to 3 mod 4.  Necessary,
// not sufficient: D = 34 passes and has no solution.
bool negative_pell_necessary_condition(const mpz_class& D);

// Fundamental class representatives of x^2 - Dy^2 = N with y >= 1, sorted by
// x.  For |N| < sqrt(D) these are read off the convergents; otherwise a brute
// force search over 1 <= y <= y_bound(D, N) collects candidates, reduced to
// one minimal representative per Nagell equivalence class.  Completeness is
// claimed only up to the search bound.
std::vector<PellSolution> pell_like(const mpz_class& D, const mpz_class& N);

mpz_class pell_like_y_bound(const mpz_class& D, const mpz_class& N);

// (pr +- D q s, p s +- q r): combines a solution of x^2-Dy^2 = N with a
// solution of x^2-Dy^2 = 1.
PellSolution brahmagupta_compose(const PellSolution& s, const PellSolution& t, const mpz_class& D,
                                 int sign);

mpz_class chebyshev_T(size_t n, const mpz_class& x);
// Schur's notation: U_n(x) = U^{classical}_{n-1}(x), so U_1 = 1, U_2 = 2x.
mpz_class chebyshev_U(size_t n, const mpz_class& x);

bool is_powerful(const mpz_class& n);
// Consecutive powerful pairs (k, k+1) with k+1 a perfect square, generated
// from the Pell family x^2 - 8y^2 = 1 as (8y^2, x^2).
std::vector<std::pair<mpz_class, mpz_class>> powerful_pairs_type1(size_t count);

}  // namespace w3j::pell

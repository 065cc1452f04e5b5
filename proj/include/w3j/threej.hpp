#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

#include "w3j/halfint.hpp"
#include "w3j/sqrt_rational.hpp"

namespace w3j {

// One 3j symbol ( a  b  c ; alpha beta gamma ).  Construction is permissive:
// selection-rule violations are recorded by selection_check / evaluated to 0,
// not rejected.
struct ThreeJ {
    HalfInt a, b, c, alpha, beta, gamma;

    HalfInt J() const { return a + b + c; }
    bool operator==(const ThreeJ&) const = default;
    std::string str() const;
};

struct SelectionReport {
    bool projections_sum_zero = false;
    bool triangle_ok = false;          // includes J integrality
    bool projections_in_range = false;
    // False when the value is forced to vanish by parity alone: mismatched
    // (j, m) parities, or J odd with all projections zero.
    bool parity_ok = false;

    bool all_ok() const {
        return projections_sum_zero && triangle_ok && projections_in_range && parity_ok;
    }
    bool physical() const { return projections_sum_zero && triangle_ok && projections_in_range; }
};

// 3x3 magic square of the nine Racah parameters; every row and column sums
// to J = a + b + c.
struct ReggeSquare {
    std::array<std::array<long long, 3>, 3> r{};

    long long J() const { return r[0][0] + r[0][1] + r[0][2]; }
    long long min_entry() const;
    bool is_magic() const;  // non-negative entries, all line sums equal

    auto operator<=>(const ReggeSquare&) const = default;
    std::string str() const;
};

// One of the 72 Regge symmetries.  Acting on a square: transpose first (if
// set), then permute rows and columns.  The value picks up (-1)^J exactly
// when row_perm and col_perm are odd overall.
struct SymmetryElement {
    std::array<int, 3> row_perm{0, 1, 2};
    std::array<int, 3> col_perm{0, 1, 2};
    bool transpose = false;
    int phase_exponent = 0;  // value multiplier is (-1)^(J * phase_exponent)

    ReggeSquare apply(const ReggeSquare& s) const;
    int phase(long long J) const { return (phase_exponent && (J & 1)) ? -1 : 1; }
    SymmetryElement compose(const SymmetryElement& then) const;
    bool operator==(const SymmetryElement&) const = default;
};

const std::vector<SymmetryElement>& symmetry_group();  // all 72 elements

// ---- selection and evaluation ----

SelectionReport selection_check(const ThreeJ& s);

// Exact Racah single-sum evaluation; non-physical symbols give 0.
SqrtRational racah_value(const ThreeJ& s);

// The bare alternating sum of the Racah series together with its index range;
// the value is phase * prefactor * sum.  Exposed for the degree property and
// the Labarthe term-by-term comparison.
struct RacahSum {
    long long lo = 0, hi = -1;                // empty when hi < lo
    std::vector<mpq_class> terms;             // signed, terms[i] for t = lo + i
    mpq_class total = 0;
};
RacahSum racah_sum_parts(const ThreeJ& s);

// Fast zero test: selection rules plus exact vanishing of the Racah sum.
bool racah_is_zero(const ThreeJ& s);

// ---- Regge machinery ----

ReggeSquare to_regge(const ThreeJ& s);          // throws NotPhysical
ThreeJ from_regge(const ReggeSquare& r);        // throws NotPhysical
std::vector<std::pair<ReggeSquare, int>> symmetry_orbit(const ReggeSquare& r);
std::pair<ReggeSquare, int> canonical_form(const ReggeSquare& r);
long long degree(const ReggeSquare& r);

// ---- series representations ----

// Permutation (p, q, r) of (0, 1, 2); value equals racah_value exactly.
SqrtRational series_representation(const ThreeJ& s, const std::array<int, 3>& pqr);

// ---- order-0 closed forms and recurrences ----

// The four never-vanishing shapes; throws NotOrderZeroShape otherwise.
SqrtRational order0_value(const ThreeJ& s);

// Verifies the six-expression contiguous-recurrence chain exactly.
bool recurrence_identities(const ThreeJ& s);

// Raynal order m >= -1 (trivial zeros map to -1).
long long raynal_order(const ThreeJ& s);

// All symbols with J <= j_max killed by one of the order-1 prefactor
// conditions, restricted to genuine polynomial zeros.
std::vector<ThreeJ> order1_zero_families(long long j_max);

// True iff J + 1 is prime, certifying that no projection assignment of
// (a, b, c) has a polynomial zero.
bool bryant_jahn_certificate(HalfInt a, HalfInt b, HalfInt c);

// True when the square is fixed by some orbit element of phase -1 (possible
// only for odd J); such symbols vanish identically.
bool symmetry_forced_zero(const ReggeSquare& r);

bool is_prime(long long n);

}  // namespace w3j

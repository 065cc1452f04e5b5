#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "w3j/sqrt_rational.hpp"
#include "w3j/threej.hpp"

namespace w3j {

// Parameters of a 3F2(a1,a2,a3; b1,b2; 1).
struct F32Params {
    std::array<mpq_class, 3> num;
    std::array<mpq_class, 2> den;
    bool operator==(const F32Params&) const = default;
    std::string str() const;
};

// Exact value of a terminating 3F2(1).  The series stops at
// K = -(largest non-positive-integer numerator parameter).
// Throws NonTerminating / DenominatorPole.
mpq_class eval_3f2_terminating(const F32Params& p, size_t* terms_out = nullptr);

// Termination index if the series terminates.
std::optional<long> termination_index(const F32Params& p);

// One of the six van der Waerden 3F2 forms, with everything needed to
// reassemble the exact 3j value.
struct VdwForm {
    std::array<int, 3> pqr;
    F32Params params;
    long long sigma;                          // phase exponent (-1)^sigma
    std::array<long long, 5> gamma_args;      // 1-A, 1-B, 1-C, D, E (integers)
    std::map<long, long> radicand_exponents;  // prod R_ik! / (J+1)!

    // (-1)^sigma * sqrt(radicand) / Gamma(...) * 3F2; throws
    // OutOfPhysicalDomain when a Gamma argument is a non-positive integer.
    SqrtRational assemble() const;
};

std::array<VdwForm, 6> vdW_forms(const ThreeJ& s);  // throws NotPhysical

// The prefactor-free classical parameter sets.  The Bandzaitis-Yutsis set is
// (-n, -z, -J-1; -z-x, -z-t) with (n, z, x, t) = (R13, R32, R31, R22) read
// from the Regge square, the arrangement that makes -J-1 a numerator
// parameter of the Whipple network.
struct ClassicForms {
    F32Params wigner, racah, majumdar, bandzaitis_yutsis;
};
ClassicForms classic_forms(const ThreeJ& s);  // throws NotPhysical

// The Bandzaitis-Yutsis series as an alternating integer sum: sum(terms) is a
// positive-integer multiple of the 3F2 value, terms[0] carries no factor of
// J+1, and every later term is divisible by J+1.
std::vector<mpz_class> bandzaitis_yutsis_integer_terms(const ThreeJ& s);

// ---- Whipple parameters (the 120-function network) ----

struct WhippleParams {
    std::array<mpq_class, 6> r;
    bool operator==(const WhippleParams&) const = default;
};

struct WhippleLabeling {
    int l, m, n;  // distinct members of {0..5}; m < n canonical
};

// Solves for the six r_i reproducing p under the labeling; sum r_i = 0.
WhippleParams to_whipple(const F32Params& p, const WhippleLabeling& lab);
// Rebuilds the parameter set of F_p(l;mn) from Whipple parameters.
F32Params fp_params(const WhippleParams& w, const WhippleLabeling& lab);

struct WhippleSet {
    WhippleLabeling lab;
    F32Params params;
    std::array<mpq_class, 3> gamma_args;  // normalization 1/Gamma(...) of F_p / F_n
};

std::vector<WhippleSet> enumerate_fp(const WhippleParams& w);  // 60 sets
std::vector<WhippleSet> enumerate_fn(const WhippleParams& w);  // 60 sets

// prod Gamma(a_i) / prod Gamma(b_i) as an exact rational, when the arguments
// pair up with integer differences (and none hits a Gamma pole); nullopt when
// the quotient is not rational-computable this way.
std::optional<mpq_class> gamma_quotient(std::vector<mpq_class> num, std::vector<mpq_class> den);

}  // namespace w3j

#include "w3j/hydrogenic.hpp"

#include "w3j/errors.hpp"
#include "w3j/factorials.hpp"
#include "w3j/hypergeom.hpp"

namespace w3j::hyd {

namespace {

void check_state(const HydrogenicState& st) {
    if (st.n < 1 || st.l < 0 || st.l > st.n - 1)
        throw OutOfDomain("invalid hydrogenic state (n, l) = (" + std::to_string(st.n) + ", " +
                          std::to_string(st.l) + ")");
}

mpq_class pow_q(const mpq_class& base, long e) {
    mpq_class r = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    if (e < 0) r = 1 / r;
    return r;
}

}  // namespace

mpq_class r_k_expectation(const HydrogenicState& st, long k, bool allow_negative_k) {
    check_state(st);
    if (k < 0 && !(allow_negative_k && k == -1))
        throw OutOfDomain("k must be >= 0 (k = -1 gated behind allow_negative_k)");
    F32Params p;
    p.num = {mpq_class(-k - 1), mpq_class(-k - 1), mpq_class(st.l + 1 - st.n)};
    p.den = {mpq_class(1), mpq_class(-st.n - st.l - k - 1)};
    mpq_class f = eval_3f2_terminating(p);
    fact::ensure(st.n + st.l + k + 1);
    mpq_class pre = pow_q(mpq_class(st.n), k - 1) / pow_q(mpq_class(2), k + 1);
    pre *= mpq_class(fact::factorial(st.n + st.l + k + 1)) / mpq_class(fact::factorial(st.n + st.l));
    mpq_class out = pre * f;
    out.canonicalize();
    return out;
}

mpq_class shared_3f2(long n, long l, long lp, long k) {
    F32Params p;
    p.num = {mpq_class(l + lp - k), mpq_class(l - lp - k - 1), mpq_class(-k - 1)};
    p.den = {mpq_class(n + l - k), mpq_class(-2 * k - 2)};
    return eval_3f2_terminating(p);  // NonTerminating / DenominatorPole pass through
}

SqrtRational f_factor(long l, long lp, long k) {
    long d = l - lp;
    if (d < 0) throw OutOfDomain("f_factor requires l - l' >= 0");
    long a1 = k + 1 - d, a2 = k + 1 + d, a3 = l + lp + k + 2, a4 = k + 1, a5 = l + lp - k - 1;
    for (long v : {a1, a2, a3, a4, a5})
        if (v < 0) throw OutOfDomain("negative factorial argument in f_factor");
    FactoredFactorial f = fact::factored(a1);
    f *= fact::factored(a2);
    f *= fact::factored(a3);
    f /= fact::factored(a4).pow(2);
    f /= fact::factored(a5);
    return SqrtRational::of_factored(1, f.e);
}

}  // namespace w3j::hyd

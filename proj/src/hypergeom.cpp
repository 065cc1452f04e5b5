#include "w3j/hypergeom.hpp"

#include <algorithm>
#include <cassert>

#include "w3j/errors.hpp"
#include "w3j/factorials.hpp"

namespace w3j {

namespace {

mpq_class qh(HalfInt h) {
    mpq_class q(mpz_class(static_cast<long>(h.twice)), mpz_class(2));
    q.canonicalize();
    return q;
}

bool is_nonpositive_integer(const mpq_class& x) { return x.get_den() == 1 && x.get_num() <= 0; }

long as_long(const mpz_class& z) { return static_cast<long>(z.get_si()); }

}  // namespace

std::string F32Params::str() const {
    return "3F2(" + num[0].get_str() + ", " + num[1].get_str() + ", " + num[2].get_str() + "; " +
           den[0].get_str() + ", " + den[1].get_str() + "; 1)";
}

std::optional<long> termination_index(const F32Params& p) {
    std::optional<long> K;
    for (const auto& a : p.num)
        if (is_nonpositive_integer(a)) {
            long k = -as_long(a.get_num());
            if (!K || k < *K) K = k;
        }
    return K;
}

mpq_class eval_3f2_terminating(const F32Params& p, size_t* terms_out) {
    auto K = termination_index(p);
    if (!K) throw NonTerminating(p.str());
    for (const auto& d : p.den)
        if (is_nonpositive_integer(d) && -as_long(d.get_num()) < *K)
            throw DenominatorPole(p.str());
    mpq_class total = 0, term = 1;
    size_t count = 0;
    for (long k = 0; k <= *K; ++k) {
        if (k > 0) {
            mpq_class ratio = (p.num[0] + (k - 1)) * (p.num[1] + (k - 1)) * (p.num[2] + (k - 1));
            ratio /= (p.den[0] + (k - 1)) * (p.den[1] + (k - 1)) * k;
            term *= ratio;
        }
        total += term;
        ++count;
    }
    if (terms_out) *terms_out = count;
    total.canonicalize();
    return total;
}

SqrtRational VdwForm::assemble() const {
    // gamma_args = (1-A, 1-B, 1-C, D, E); the first three are >= 1 for a
    // physical symbol, the last two can hit non-positive integers.
    for (long long g : gamma_args)
        if (g <= 0) throw OutOfPhysicalDomain("Gamma(" + std::to_string(g) + ") in vdW prefactor");
    mpq_class f = eval_3f2_terminating(params);
    if (f == 0) return SqrtRational{};
    mpq_class denom = 1;
    for (long long g : gamma_args) denom *= mpq_class(fact::factorial(g - 1));
    mpq_class coeff = f / denom;
    if (sigma % 2 != 0) coeff = -coeff;
    return SqrtRational::of_factored(coeff, radicand_exponents);
}

std::array<VdwForm, 6> vdW_forms(const ThreeJ& s) {
    ReggeSquare R = to_regge(s);
    FactoredFactorial rad;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) rad *= fact::factored(R.r[i][k]);
    rad /= fact::factored(R.J() + 1);

    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
    auto parity = [](const std::array<int, 3>& p) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2;
    };

    std::array<VdwForm, 6> out;
    for (size_t i = 0; i < 6; ++i) {
        const auto& prm = perms[i];
        int p = prm[0], q = prm[1], r = prm[2];
        VdwForm f;
        f.pqr = prm;
        long long A = -R.r[1][p], B = -R.r[2][q], C = -R.r[0][r];
        long long D = 1 + R.r[2][r] - R.r[1][p], E = 1 + R.r[1][r] - R.r[2][q];
        f.params.num = {mpq_class(static_cast<long>(A)), mpq_class(static_cast<long>(B)),
                        mpq_class(static_cast<long>(C))};
        f.params.den = {mpq_class(static_cast<long>(D)), mpq_class(static_cast<long>(E))};
        f.sigma = R.r[2][p] - R.r[1][q] + (parity(prm) ? R.J() : 0);
        f.gamma_args = {1 - A, 1 - B, 1 - C, D, E};
        f.radicand_exponents = rad.e;
        out[i] = f;
    }
    return out;
}

ClassicForms classic_forms(const ThreeJ& s) {
    ReggeSquare R = to_regge(s);  // validates physicality
    if (!(s.alpha.abs() <= s.a && s.beta.abs() <= s.b && s.gamma.abs() <= s.c))
        throw NotPhysical("projection out of range");
    const mpq_class a = qh(s.a), b = qh(s.b), c = qh(s.c);
    const mpq_class al = qh(s.alpha), be = qh(s.beta), ga = qh(s.gamma);
    ClassicForms f;
    f.wigner.num = {a - al + 1, -c - ga, a - b - c};
    f.wigner.den = {-b - c - al, a - b - ga + 1};
    f.racah.num = {a + al + 1, -c + ga, -a + al};
    f.racah.den = {-b - c + al, b - c + al + 1};
    f.majumdar.num = {a + b - c + 1, -c - ga, a - b - c};
    f.majumdar.den = {-2 * c, a - c - be + 1};
    long nn = static_cast<long>(R.r[0][2]);
    long z = static_cast<long>(R.r[2][1]);
    long x = static_cast<long>(R.r[2][0]);
    long t = static_cast<long>(R.r[1][1]);
    long J = static_cast<long>(R.J());
    f.bandzaitis_yutsis.num = {mpq_class(-nn), mpq_class(-z), mpq_class(-J - 1)};
    f.bandzaitis_yutsis.den = {mpq_class(-z - x), mpq_class(-z - t)};
    return f;
}

std::vector<mpz_class> bandzaitis_yutsis_integer_terms(const ThreeJ& s) {
    ReggeSquare R = to_regge(s);
    long n = static_cast<long>(R.r[0][2]), z = static_cast<long>(R.r[2][1]);
    long x = static_cast<long>(R.r[2][0]), t = static_cast<long>(R.r[1][1]);
    long J = static_cast<long>(R.J());
    long K = std::min({n, z, J + 1});
    fact::ensure(std::max(z + x, z + t));
    auto binom = [](long m, long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
        return b;
    };
    // term_k = (-1)^k C(n,k) C(z,k) C(J+1,k) / (C(z+x,k) C(z+t,k)); cleared by
    // M = (z+x)!(z+t)! / ((z+x-K)!(z+t-K)!) so every term is an integer.
    std::vector<mpz_class> out;
    mpz_class tmp;
    for (long k = 0; k <= K; ++k) {
        mpz_class v = binom(n, k) * binom(z, k) * binom(J + 1, k);
        v *= fact::factorial(k) * fact::factorial(k);
        mpz_divexact(tmp.get_mpz_t(), fact::factorial(z + x - k).get_mpz_t(),
                     fact::factorial(z + x - K).get_mpz_t());
        v *= tmp;
        mpz_divexact(tmp.get_mpz_t(), fact::factorial(z + t - k).get_mpz_t(),
                     fact::factorial(z + t - K).get_mpz_t());
        v *= tmp;
        if (k % 2) v = -v;
        out.push_back(v);
    }
    return out;
}

WhippleParams to_whipple(const F32Params& p, const WhippleLabeling& lab) {
    auto bad = [&] {
        return lab.l < 0 || lab.l > 5 || lab.m < 0 || lab.m > 5 || lab.n < 0 || lab.n > 5 ||
               lab.l == lab.m || lab.l == lab.n || lab.m == lab.n;
    };
    if (bad()) throw InconsistentLabeling("labeling indices must be distinct members of 0..5");
    std::array<int, 3> comp{};
    int ci = 0;
    for (int i = 0; i < 6; ++i)
        if (i != lab.l && i != lab.m && i != lab.n) comp[ci++] = i;

    const mpq_class A = p.num[0], B = p.num[1], C = p.num[2];
    const mpq_class D = p.den[0], E = p.den[1];
    // S = r_m + r_n from the linear system; then everything else unwinds.
    mpq_class S = (2 * (A + B + C) - D - E - 1) / 3;
    WhippleParams w;
    w.r[comp[0]] = A - mpq_class(1, 2) - S;
    w.r[comp[1]] = B - mpq_class(1, 2) - S;
    w.r[comp[2]] = C - mpq_class(1, 2) - S;
    w.r[lab.l] = mpq_class(3, 2) + 2 * S - (A + B + C);
    w.r[lab.m] = D - 1 + w.r[lab.l];
    w.r[lab.n] = E - 1 + w.r[lab.l];
    mpq_class sum = 0;
    for (auto& ri : w.r) {
        ri.canonicalize();
        sum += ri;
    }
    assert(sum == 0);
    return w;
}

F32Params fp_params(const WhippleParams& w, const WhippleLabeling& lab) {
    std::array<int, 3> comp{};
    int ci = 0;
    for (int i = 0; i < 6; ++i)
        if (i != lab.l && i != lab.m && i != lab.n) comp[ci++] = i;
    F32Params p;
    for (int i = 0; i < 3; ++i) {
        p.num[i] = mpq_class(1, 2) + w.r[comp[i]] + w.r[lab.m] + w.r[lab.n];
        p.num[i].canonicalize();
    }
    p.den[0] = 1 + w.r[lab.m] - w.r[lab.l];
    p.den[1] = 1 + w.r[lab.n] - w.r[lab.l];
    p.den[0].canonicalize();
    p.den[1].canonicalize();
    return p;
}

namespace {

std::vector<WhippleSet> enumerate_sets(const WhippleParams& w) {
    std::vector<WhippleSet> out;
    out.reserve(60);
    for (int l = 0; l < 6; ++l)
        for (int m = 0; m < 6; ++m) {
            if (m == l) continue;
            for (int n = m + 1; n < 6; ++n) {
                if (n == l) continue;
                WhippleLabeling lab{l, m, n};
                WhippleSet set;
                set.lab = lab;
                set.params = fp_params(w, lab);
                std::array<int, 3> comp{};
                int ci = 0;
                for (int i = 0; i < 6; ++i)
                    if (i != l && i != m && i != n) comp[ci++] = i;
                set.gamma_args[0] = mpq_class(1, 2) + w.r[comp[0]] + w.r[comp[1]] + w.r[comp[2]];
                set.gamma_args[1] = 1 + w.r[m] - w.r[l];
                set.gamma_args[2] = 1 + w.r[n] - w.r[l];
                for (auto& g : set.gamma_args) g.canonicalize();
                out.push_back(set);
            }
        }
    return out;
}

}  // namespace

std::vector<WhippleSet> enumerate_fp(const WhippleParams& w) { return enumerate_sets(w); }

std::vector<WhippleSet> enumerate_fn(const WhippleParams& w) {
    WhippleParams neg;
    for (int i = 0; i < 6; ++i) neg.r[i] = -w.r[i];
    return enumerate_sets(neg);
}

std::optional<mpq_class> gamma_quotient(std::vector<mpq_class> num, std::vector<mpq_class> den) {
    if (num.size() != den.size()) return std::nullopt;
    // Gamma poles make the quotient non-rational (or 0/inf); refuse.
    for (const auto& x : num)
        if (is_nonpositive_integer(x)) return std::nullopt;
    for (const auto& x : den)
        if (is_nonpositive_integer(x)) return std::nullopt;
    mpq_class q = 1;
    std::vector<bool> used(den.size(), false);
    for (const auto& a : num) {
        bool matched = false;
        for (size_t i = 0; i < den.size(); ++i) {
            if (used[i]) continue;
            mpq_class diff = a - den[i];
            if (diff.get_den() != 1) continue;
            used[i] = true;
            matched = true;
            // Gamma(a)/Gamma(b) with a = b + k: rising factorial b(b+1)...(b+k-1)
            long k = as_long(diff.get_num());
            mpq_class b = den[i];
            if (k >= 0) {
                for (long j = 0; j < k; ++j) q *= (b + j);
            } else {
                for (long j = 0; j < -k; ++j) q /= (a + j);
            }
            break;
        }
        if (!matched) return std::nullopt;
    }
    q.canonicalize();
    return q;
}

}  // namespace w3j

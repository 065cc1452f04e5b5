#include "w3j/sqrt_rational.hpp"

#include <cassert>
#include <cmath>

#include "w3j/errors.hpp"
#include "w3j/factorials.hpp"

namespace w3j {

namespace {

constexpr long kTrialBound = 100000;

// n = square * sf with sf squarefree (modulo the documented fallback).
void split_square(const mpz_class& n, mpz_class& square_root, mpz_class& sf) {
    assert(n > 0);
    square_root = 1;
    sf = 1;
    mpz_class rem = n;
    for (long p : fact::primes_upto(kTrialBound)) {
        if (rem == 1) break;
        if (mpz_divisible_ui_p(rem.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
            // Cheap early exit: no prime factor <= rem^(1/2) left.
            if (p > 0 && mpz_cmp_ui(rem.get_mpz_t(), static_cast<unsigned long>(p) *
                                                         static_cast<unsigned long>(p)) < 0)
                break;
            continue;
        }
        long e = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), static_cast<unsigned long>(p));
            ++e;
        }
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e / 2));
        square_root *= pw;
        if (e % 2) sf *= p;
    }
    if (rem != 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
            square_root *= r;
        } else {
            // Fallback: treat the rough cofactor as squarefree.
            sf *= rem;
        }
    }
}

}  // namespace

void SqrtRational::normalize_zero() {
    if (sign_ == 0 || scale_ == 0) {
        sign_ = 0;
        scale_ = 1;
        sf_ = 1;
    }
}

SqrtRational SqrtRational::sqrt_of(int sign, const mpq_class& radicand) {
    if (radicand < 0) throw OutOfDomain("negative radicand");
    SqrtRational v;
    if (sign == 0 || radicand == 0) return v;
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class m = radicand.get_num() * radicand.get_den();
    mpz_class sq, sf;
    split_square(m, sq, sf);
    v.sign_ = sign < 0 ? -1 : 1;
    v.scale_ = mpq_class(sq, radicand.get_den());
    v.scale_.canonicalize();
    v.sf_ = sf;
    return v;
}

SqrtRational SqrtRational::of_rational(const mpq_class& q) {
    SqrtRational v;
    if (q == 0) return v;
    v.sign_ = sgn(q);
    v.scale_ = abs(q);
    v.sf_ = 1;
    return v;
}

SqrtRational SqrtRational::of_factored(const mpq_class& coeff, const std::map<long, long>& exps) {
    SqrtRational v;
    if (coeff == 0) return v;
    mpq_class scale = abs(coeff);
    mpz_class sf = 1;
    mpz_class pw;
    for (auto [p, e] : exps) {
        if (e == 0) continue;
        // e = 2k + r with r in {0,1}
        long k = (e >= 0) ? e / 2 : -((-e + 1) / 2);
        long r = e - 2 * k;
        assert(r == 0 || r == 1);
        if (k != 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(k < 0 ? -k : k));
            if (k > 0)
                scale *= pw;
            else
                scale /= pw;
        }
        if (r) sf *= p;
    }
    v.sign_ = sgn(coeff);
    v.scale_ = scale;
    v.scale_.canonicalize();
    v.sf_ = sf;
    return v;
}

mpq_class SqrtRational::square() const {
    if (sign_ == 0) return mpq_class(0);
    mpq_class s = scale_ * scale_ * mpq_class(sf_);
    s.canonicalize();
    return s;
}

mpq_class SqrtRational::signed_square() const { return sign_ < 0 ? mpq_class(-square()) : square(); }

double SqrtRational::to_double() const {
    if (sign_ == 0) return 0.0;
    // 128-bit intermediate so the final double is within 1 ulp.
    mpf_class acc(scale_, 128);
    mpf_class root(0, 128);
    mpf_sqrt(root.get_mpf_t(), mpf_class(sf_, 128).get_mpf_t());
    acc *= root;
    return sign_ * acc.get_d();
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
    SqrtRational v;
    if (sign_ == 0 || o.sign_ == 0) return v;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), sf_.get_mpz_t(), o.sf_.get_mpz_t());
    v.sign_ = sign_ * o.sign_;
    v.scale_ = scale_ * o.scale_ * mpq_class(g);
    v.scale_.canonicalize();
    v.sf_ = (sf_ / g) * (o.sf_ / g);
    return v;
}

SqrtRational SqrtRational::operator*(const mpq_class& r) const {
    SqrtRational v;
    if (sign_ == 0 || r == 0) return v;
    v.sign_ = sign_ * sgn(r);
    v.scale_ = scale_ * abs(r);
    v.scale_.canonicalize();
    v.sf_ = sf_;
    return v;
}

SqrtRational operator*(const mpq_class& r, const SqrtRational& v) { return v * r; }

SqrtRational SqrtRational::operator+(const SqrtRational& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sf_ != o.sf_)
        throw IncommensurableRadicands("cannot add sqrt(" + sf_.get_str() + ") and sqrt(" +
                                       o.sf_.get_str() + ") spans");
    mpq_class s = mpq_class(sign_) * scale_ + mpq_class(o.sign_) * o.scale_;
    SqrtRational v;
    if (s == 0) return v;
    v.sign_ = sgn(s);
    v.scale_ = abs(s);
    v.sf_ = sf_;
    return v;
}

SqrtRational SqrtRational::operator-() const {
    SqrtRational v = *this;
    v.sign_ = -v.sign_;
    v.normalize_zero();
    return v;
}

SqrtRational SqrtRational::operator-(const SqrtRational& o) const { return *this + (-o); }

std::string SqrtRational::str() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    if (sf_ == 1) return s + scale_.get_str();
    if (scale_ == 1) return s + "sqrt(" + sf_.get_str() + ")";
    mpq_class sq = square();
    return s + "sqrt(" + sq.get_str() + ")";
}

}  // namespace w3j

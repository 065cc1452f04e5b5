#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>

namespace w3j {

// Exact value sign * sqrt(p/q), kept in the canonical form
//
//     sign * scale * sqrt(sf)
//
// with scale a positive rational and sf a squarefree positive integer, so
// equality is field-wise comparison and the zero test is just sign == 0.
// Square extraction uses trial division up to a fixed bound and falls back to
// perfect-square detection on the remaining cofactor; a large cofactor that is
// neither fully factored nor a perfect square is kept under the radical as-is.
// Every radicand in this library is a product of factorials, which factor
// smoothly, so the fallback is never hit in practice.
class SqrtRational {
  public:
    SqrtRational() : sign_(0), scale_(1), sf_(1) {}

    // value = sign * sqrt(radicand), radicand >= 0 canonical.
    static SqrtRational sqrt_of(int sign, const mpq_class& radicand);
    // value = q (exactly), i.e. sqrt(q^2) with q's sign.
    static SqrtRational of_rational(const mpq_class& q);
    // value = coeff * sqrt(prod p^e) for a prime exponent map (exponents may
    // be negative).  No trial division; squares split off by exponent parity.
    static SqrtRational of_factored(const mpq_class& coeff, const std::map<long, long>& exps);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    const mpq_class& scale() const { return scale_; }
    const mpz_class& squarefree_part() const { return sf_; }

    // The exact square, as a rational (loses the sign).
    mpq_class square() const;
    // sign * (p/q) with square() = p/q: the signed radicand.
    mpq_class signed_square() const;

    double to_double() const;

    SqrtRational operator*(const SqrtRational& o) const;
    SqrtRational operator*(const mpq_class& r) const;
    // Throws IncommensurableRadicands unless both operands lie in the same
    // one-dimensional sqrt-span (or one is zero).
    SqrtRational operator+(const SqrtRational& o) const;
    SqrtRational operator-(const SqrtRational& o) const;
    SqrtRational operator-() const;

    bool operator==(const SqrtRational& o) const {
        return sign_ == o.sign_ && scale_ == o.scale_ && sf_ == o.sf_;
    }

    std::string str() const;

  private:
    int sign_;         // -1, 0, +1
    mpq_class scale_;  // positive rational (1 when sign_ == 0)
    mpz_class sf_;     // squarefree positive integer (1 when sign_ == 0)

    void normalize_zero();
};

inline std::ostream& operator<<(std::ostream& os, const SqrtRational& v) { return os << v.str(); }

SqrtRational operator*(const mpq_class& r, const SqrtRational& v);

}  // namespace w3j

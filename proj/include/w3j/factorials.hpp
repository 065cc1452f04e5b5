#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace w3j {

// n! as a map prime -> exponent, exponents from Legendre's formula.
// Division is exponent subtraction and may legitimately go negative when a
// caller builds a rational ratio of factorials.
struct FactoredFactorial {
    std::map<long, long> e;

    FactoredFactorial& operator*=(const FactoredFactorial& o);
    FactoredFactorial& operator/=(const FactoredFactorial& o);
    FactoredFactorial pow(long k) const;

    // Assembles prod p^e as an exact rational (negative exponents go to the
    // denominator).
    mpq_class to_rational() const;
    bool operator==(const FactoredFactorial&) const = default;
};

FactoredFactorial factorial_factored(long n);

// Process-wide factorial cache.  ensure() grows it (thread-safe); factorial()
// reads without locking provided some caller has ensured a large enough bound,
// otherwise it grows the table itself.
namespace fact {
void ensure(long n);
const mpz_class& factorial(long n);
// Cached prime factorization of n! (same growth discipline as factorial()).
const FactoredFactorial& factored(long n);
// Primes up to at least `bound`.  Returns a copy so concurrent growth of the
// internal sieve cannot invalidate a caller's view.
std::vector<long> primes_upto(long bound);
}  // namespace fact

}  // namespace w3j

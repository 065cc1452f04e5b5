#include "w3j/factorials.hpp"

#include <atomic>
#include <cassert>
#include <deque>
#include <mutex>

namespace w3j {

FactoredFactorial& FactoredFactorial::operator*=(const FactoredFactorial& o) {
    for (auto [p, k] : o.e) {
        long& v = e[p];
        v += k;
        if (v == 0) e.erase(p);
    }
    return *this;
}

FactoredFactorial& FactoredFactorial::operator/=(const FactoredFactorial& o) {
    for (auto [p, k] : o.e) {
        long& v = e[p];
        v -= k;
        if (v == 0) e.erase(p);
    }
    return *this;
}

FactoredFactorial FactoredFactorial::pow(long k) const {
    FactoredFactorial r;
    if (k == 0) return r;
    for (auto [p, v] : e) r.e[p] = v * k;
    return r;
}

mpq_class FactoredFactorial::to_rational() const {
    mpz_class num = 1, den = 1;
    mpz_class pw;
    for (auto [p, k] : e) {
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(k < 0 ? -k : k));
        if (k > 0)
            num *= pw;
        else
            den *= pw;
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

FactoredFactorial factorial_factored(long n) { return fact::factored(n); }

namespace fact {

namespace {
std::mutex g_mutex;
std::deque<mpz_class> g_table;           // g_table[n] = n!; deque: growth keeps refs valid
std::atomic<size_t> g_size{0};           // published prefix length of g_table
std::mutex g_fmutex;
std::deque<FactoredFactorial> g_ftable;  // g_ftable[n] = factorization of n!
std::atomic<size_t> g_fsize{0};
std::vector<long> g_primes;              // primes, ascending
long g_prime_bound = 0;
std::mutex g_prime_mutex;

FactoredFactorial legendre(long n) {
    FactoredFactorial f;
    for (long p : primes_upto(n)) {
        if (p > n) break;
        long ex = 0;
        for (long q = p; q <= n; q *= p) {
            ex += n / q;
            if (q > n / p) break;  // next q would exceed n
        }
        f.e[p] = ex;
    }
    return f;
}
}  // namespace

void ensure(long n) {
    if (n < 0) n = 0;
    if (static_cast<size_t>(n) < g_size.load(std::memory_order_acquire)) return;
    std::lock_guard<std::mutex> lk(g_mutex);
    size_t sz = g_size.load(std::memory_order_relaxed);
    if (sz == 0) {
        g_table.emplace_back(1);
        sz = 1;
    }
    while (sz <= static_cast<size_t>(n)) {
        g_table.push_back(g_table[sz - 1] * static_cast<unsigned long>(sz));
        ++sz;
    }
    g_size.store(sz, std::memory_order_release);
}

const mpz_class& factorial(long n) {
    assert(n >= 0);
    if (static_cast<size_t>(n) >= g_size.load(std::memory_order_acquire)) ensure(n);
    return g_table[static_cast<size_t>(n)];
}

const FactoredFactorial& factored(long n) {
    assert(n >= 0);
    if (static_cast<size_t>(n) < g_fsize.load(std::memory_order_acquire))
        return g_ftable[static_cast<size_t>(n)];
    std::lock_guard<std::mutex> lk(g_fmutex);
    size_t sz = g_fsize.load(std::memory_order_relaxed);
    while (sz <= static_cast<size_t>(n)) {
        g_ftable.push_back(legendre(static_cast<long>(sz)));
        ++sz;
    }
    g_fsize.store(sz, std::memory_order_release);
    return g_ftable[static_cast<size_t>(n)];
}

std::vector<long> primes_upto(long bound) {
    std::lock_guard<std::mutex> lk(g_prime_mutex);
    if (bound <= g_prime_bound) return g_primes;
    long newbound = std::max(bound, g_prime_bound * 2 + 16);
    std::vector<char> sieve(static_cast<size_t>(newbound) + 1, 1);
    g_primes.clear();
    for (long i = 2; i <= newbound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        g_primes.push_back(i);
        for (long j = i * i; j <= newbound && j > 0; j += i) sieve[static_cast<size_t>(j)] = 0;
    }
    g_prime_bound = newbound;
    return g_primes;
}

}  // namespace fact
}  // namespace w3j

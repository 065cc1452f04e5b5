#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>

namespace w3j {

// Half-integer stored as its double.  HalfInt{.twice = 7} is the value 7/2.
// Everything downstream (selection rules, Regge entries, series bounds)
// reduces to integer arithmetic and parity checks on `twice`.
struct HalfInt {
    long long twice = 0;

    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice(2LL * n) {}          // NOLINT: implicit by design
    constexpr HalfInt(long long n) : twice(2LL * n) {}    // NOLINT
    static constexpr HalfInt from_twice(long long t) { return HalfInt{t, FromTwice{}}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    // Valid only when is_integer().
    constexpr long long as_integer() const { return twice / 2; }
    constexpr double as_double() const { return 0.5 * static_cast<double>(twice); }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice - o.twice); }
    constexpr HalfInt operator-() const { return from_twice(-twice); }
    constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt abs() const { return from_twice(twice < 0 ? -twice : twice); }

    std::string str() const {
        if (is_integer()) return std::to_string(as_integer());
        return std::to_string(twice) + "/2";
    }

  private:
    struct FromTwice {};
    constexpr HalfInt(long long t, FromTwice) : twice(t) {}
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

// n/2 as a HalfInt.
constexpr HalfInt half(long long n) { return HalfInt::from_twice(n); }

}  // namespace w3j

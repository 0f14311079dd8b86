#pragma once
// Exact integer arithmetic for coefficient work. Everything downstream of
// the enumeration engines runs on Bigint: alternating sums (HR formulas,
// identity right-hand sides) overflow 64-bit well before the grids end, and
// intermediate values can be negative even when the final result is not.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace permstat {

using Bigint = boost::multiprecision::cpp_int;

inline Bigint factorial(long long a) {
    if (a < 0)
        throw std::domain_error("factorial of negative argument " + std::to_string(a));
    Bigint p = 1;
    for (long long t = 2; t <= a; ++t)
        p *= t;
    return p;
}

// Printed identity forms can place a negative integer under a factorial at
// boundary grid points; callers that must survive that use this variant and
// treat nullopt as "undefined".
inline std::optional<Bigint> checked_factorial(long long a) {
    if (a < 0)
        return std::nullopt;
    return factorial(a);
}

// Convention used throughout: C(a,0) = 1 for every integer a (including
// negative a), and 0 outside the lattice 0 <= b <= a.
inline Bigint binomial(long long a, long long b) {
    if (b < 0)
        return 0;
    if (b == 0)
        return 1;
    if (a < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    Bigint r = 1;
    for (long long t = 1; t <= b; ++t) {
        r *= a - b + t;
        r /= t;  // exact: r is the binomial C(a-b+t, t) after each step
    }
    return r;
}

// Rising factorial (a)_n = a(a+1)...(a+n-1), empty product 1.
inline Bigint rising(long long a, long long n) {
    Bigint p = 1;
    for (long long t = 0; t < n; ++t)
        p *= a + t;
    return p;
}

// Falling factorial (a)↓_n = a(a-1)...(a-n+1), empty product 1.
inline Bigint falling(long long a, long long n) {
    Bigint p = 1;
    for (long long t = 0; t < n; ++t)
        p *= a - t;
    return p;
}

inline std::string to_decimal(const Bigint& v) { return v.str(); }

inline Bigint from_decimal(const std::string& s) { return Bigint(s); }

}  // namespace permstat

#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace fibsect {

// Arbitrary-precision signed integer. All sequence values and polynomial
// coefficients in this library live in this type; arithmetic is exact.
using Int = mpz_class;

// mpz_class has no long long constructor; go through long when it fits.
inline Int make_int(long long v) {
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
        return Int(static_cast<long>(v));
    return Int(std::to_string(v));
}

// base^exp with the convention 0^0 = 1 (empty product).
inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Binomial coefficient C(n, k); zero whenever k < 0 or k > n.
// Multiplicative formula with running division: every intermediate
// division C(n, i-1) * (n - i + 1) / i is exact.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= make_int(n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

// Parses an optionally signed decimal string; throws std::invalid_argument
// on anything else. Round-trips with to_decimal losslessly.
inline Int from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_decimal: empty string");
    return Int(s);
}

}  // namespace fibsect

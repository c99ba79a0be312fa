#pragma once

#include <ostream>

#include "fibsect/int.hpp"

namespace fibsect {

/**
 * GoldenInt: elements a + b*phi of the ring Z[phi], phi = (1+sqrt5)/2.
 *
 * phi^2 = phi + 1, so the ring is closed under multiplication with no
 * parity bookkeeping:
 *   (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi.
 *
 * alpha = phi = (0,1) and beta = 1 - phi = (1,-1) satisfy alpha + beta = 1
 * and alpha * beta = -1; their powers carry the whole Binet machinery
 * exactly, with no floating point anywhere.
 */
struct GoldenInt {
    Int a;
    Int b;

    GoldenInt() : a(0), b(0) {}
    GoldenInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    static GoldenInt unit() { return GoldenInt(1, 0); }
    static GoldenInt alpha() { return GoldenInt(0, 1); }
    static GoldenInt beta() { return GoldenInt(1, -1); }

    // Conjugation swaps alpha and beta: conj(a + b phi) = (a+b) - b phi.
    GoldenInt conj() const { return GoldenInt(a + b, -b); }

    bool operator==(const GoldenInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const GoldenInt& o) const { return !(*this == o); }

    GoldenInt operator+(const GoldenInt& o) const { return GoldenInt(a + o.a, b + o.b); }
    GoldenInt operator-(const GoldenInt& o) const { return GoldenInt(a - o.a, b - o.b); }
    GoldenInt operator-() const { return GoldenInt(-a, -b); }

    GoldenInt operator*(const GoldenInt& o) const {
        Int bd = b * o.b;
        return GoldenInt(a * o.a + bd, a * o.b + b * o.a + bd);
    }

    friend std::ostream& operator<<(std::ostream& os, const GoldenInt& g) {
        return os << "(" << g.a << ", " << g.b << ")";
    }
};

// g^k by binary exponentiation; k = 0 gives the unit (1, 0).
inline GoldenInt golden_pow(GoldenInt g, unsigned long long k) {
    GoldenInt r = GoldenInt::unit();
    while (k > 0) {
        if (k & 1) r = r * g;
        g = g * g;
        k >>= 1;
    }
    return r;
}

}  // namespace fibsect

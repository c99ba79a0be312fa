#pragma once

#include "fibsect/poly.hpp"

namespace fibsect {

// Degree index, series order and sign selector for the polynomial families
// below. The order s means the generating series is raised to the power
// s + 1; eps is the sign in the quadratic term of its denominator.
struct ChebParams {
    long long n = 0;
    long long s = 0;
    int eps = -1;

    void validate() const;
};

// Chebyshev polynomial of the second kind U_n(x), from the three-term
// recursion U_n = 2x U_{n-1} - U_{n-2}, U_0 = 1, U_1 = 2x. These are the
// coefficients of 1/(1 - 2tx + t^2) = sum U_n(x) t^n; n < 0 yields the
// zero polynomial (the series has no negative-index coefficients).
IntPolynomial cheb_u(long long n);

// Higher-order family U_n^{(s)}(x): coefficients of 1/(1 - 2tx + t^2)^{s+1},
// assembled directly from the explicit binomial sums (even/odd split):
//   U_{2m}^{(s)}   = sum_k x^{2k}   (-1)^{m-k} C(m+k+s,   2k+s)   C(2k+s,   s) 2^{2k}
//   U_{2m+1}^{(s)} = sum_k x^{2k+1} (-1)^{m-k} C(m+k+s+1, 2k+s+1) C(2k+s+1, s) 2^{2k+1}
// U_n^{(0)} = U_n.
IntPolynomial gegen_u_explicit(long long n, long long s);

// Signed variant: coefficients of 1/(1 - 2tx - eps t^2)^{s+1}, i.e. the
// sums above with (-1)^{m-k} replaced by eps^{m-k}. eps = -1 reduces to
// the unsigned family. Rejects eps outside {-1, +1}.
IntPolynomial signed_u_explicit(long long n, long long s, int eps);

// Monic-argument variant V_n^{(s)}(y; eps): the signed family under the
// substitution 2x = y, so the generating function reads
// 1/(1 - t y - eps t^2)^{s+1}. Integer coefficients, suited to exact
// evaluation at integer arguments; the powers of 2 in the explicit sums
// cancel against the substitution.
IntPolynomial monic_signed_u(long long n, long long s, int eps);

}  // namespace fibsect

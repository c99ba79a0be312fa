#include "fibsect/chebyshev.hpp"

#include <stdexcept>
#include <vector>

namespace fibsect {

namespace {

void check_order(long long s) {
    if (s < 0) throw std::invalid_argument("chebyshev: order s must be >= 0");
}

void check_eps(int eps) {
    if (eps != -1 && eps != 1) throw std::invalid_argument("chebyshev: eps must be -1 or +1");
}

Int eps_pow(int eps, long long e) {
    // e >= 0 here; only the parity matters for eps = -1.
    return (eps == -1 && (e & 1)) ? Int(-1) : Int(1);
}

// Coefficient list of the signed explicit sums. powers_of_two selects the
// x-variable normalization (2^{2k} resp. 2^{2k+1} factors); without it the
// same sums give the monic y-variable form.
IntPolynomial signed_family(long long n, long long s, int eps, bool powers_of_two) {
    if (n < 0) return IntPolynomial();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    if (n % 2 == 0) {
        long long m = n / 2;
        for (long long k = 0; k <= m; ++k) {
            Int term = eps_pow(eps, m - k) * binomial(m + k + s, 2 * k + s) *
                       binomial(2 * k + s, s);
            if (powers_of_two) term <<= 2 * k;
            c[static_cast<std::size_t>(2 * k)] = term;
        }
    } else {
        long long m = (n - 1) / 2;
        for (long long k = 0; k <= m; ++k) {
            Int term = eps_pow(eps, m - k) * binomial(m + k + s + 1, 2 * k + s + 1) *
                       binomial(2 * k + s + 1, s);
            if (powers_of_two) term <<= 2 * k + 1;
            c[static_cast<std::size_t>(2 * k + 1)] = term;
        }
    }
    return IntPolynomial::from_coeffs(std::move(c));
}

}  // namespace

void ChebParams::validate() const {
    if (n < 0) throw std::invalid_argument("chebyshev: index n must be >= 0");
    check_order(s);
    check_eps(eps);
}

IntPolynomial cheb_u(long long n) {
    if (n < 0) return IntPolynomial();
    IntPolynomial prev{1};
    if (n == 0) return prev;
    IntPolynomial cur{0, 2};
    const IntPolynomial two_x{0, 2};
    for (long long i = 2; i <= n; ++i) {
        IntPolynomial next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial gegen_u_explicit(long long n, long long s) {
    check_order(s);
    return signed_family(n, s, -1, true);
}

IntPolynomial signed_u_explicit(long long n, long long s, int eps) {
    check_order(s);
    check_eps(eps);
    return signed_family(n, s, eps, true);
}

IntPolynomial monic_signed_u(long long n, long long s, int eps) {
    check_order(s);
    check_eps(eps);
    return signed_family(n, s, eps, false);
}

}  // namespace fibsect

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "fibsect/chebyshev.hpp"
#include "fibsect/poly.hpp"
#include "fibsect/series.hpp"

using namespace fibsect;

TEST_CASE("recursion base cases and a step") {
    CHECK(cheb_u(0) == IntPolynomial{1});
    CHECK(cheb_u(1) == IntPolynomial{0, 2});
    CHECK(cheb_u(2) == IntPolynomial{-1, 0, 4});
    CHECK(cheb_u(3) == IntPolynomial{0, -4, 0, 8});
    CHECK(cheb_u(-1) == IntPolynomial());
}

TEST_CASE("explicit sums match the stated examples") {
    CHECK(gegen_u_explicit(2, 0) == IntPolynomial{-1, 0, 4});
    CHECK(gegen_u_explicit(0, 3) == IntPolynomial{1});
    CHECK(gegen_u_explicit(2, 1) == IntPolynomial{-2, 0, 12});
}

TEST_CASE("explicit sums reproduce the recursion for order zero") {
    for (long long n = 0; n <= 60; ++n) CHECK(gegen_u_explicit(n, 0) == cheb_u(n));
}

TEST_CASE("signed family") {
    CHECK(signed_u_explicit(2, 0, 1) == IntPolynomial{1, 0, 4});
    CHECK(signed_u_explicit(5, 2, -1) == gegen_u_explicit(5, 2));
    CHECK(signed_u_explicit(2, 1, 1) == IntPolynomial{2, 0, 12});
    CHECK(signed_u_explicit(-3, 2, 1) == IntPolynomial());
    CHECK_THROWS_AS(signed_u_explicit(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(signed_u_explicit(2, 1, 2), std::invalid_argument);
}

TEST_CASE("monic variant") {
    CHECK(monic_signed_u(2, 0, 1) == IntPolynomial{1, 0, 1});
    CHECK(monic_signed_u(2, 1, -1) == IntPolynomial{-2, 0, 3});
    CHECK(monic_signed_u(1, 4, 1) == IntPolynomial{0, 5});
    CHECK(monic_signed_u(-1, 0, 1) == IntPolynomial());
    CHECK_THROWS_AS(monic_signed_u(2, 1, 5), std::invalid_argument);
}

TEST_CASE("monic variant satisfies the three-term recursion at order zero") {
    // V_n = y V_{n-1} + eps V_{n-2}
    const IntPolynomial y{0, 1};
    for (int eps : {-1, 1}) {
        const IntPolynomial e(eps);
        for (long long n = 2; n <= 40; ++n)
            CHECK(monic_signed_u(n, 0, eps) ==
                  y * monic_signed_u(n - 1, 0, eps) + e * monic_signed_u(n - 2, 0, eps));
    }
}

TEST_CASE("order recursion steps s down by one") {
    // V_n^{(s)} - y V_{n-1}^{(s)} - eps V_{n-2}^{(s)} = V_n^{(s-1)}
    const IntPolynomial y{0, 1};
    for (int eps : {-1, 1}) {
        const IntPolynomial e(eps);
        for (long long s = 1; s <= 4; ++s)
            for (long long n = 2; n <= 30; ++n)
                CHECK(monic_signed_u(n, s, eps) - y * monic_signed_u(n - 1, s, eps) -
                          e * monic_signed_u(n - 2, s, eps) ==
                      monic_signed_u(n, s - 1, eps));
    }
}

TEST_CASE("parity: only powers with the parity of n appear") {
    for (int eps : {-1, 1})
        for (long long s = 0; s <= 3; ++s)
            for (long long n = 0; n <= 25; ++n) {
                const auto poly = monic_signed_u(n, s, eps);
                const auto& c = poly.coeffs();
                for (std::size_t i = 0; i < c.size(); ++i)
                    if ((static_cast<long long>(i) % 2) != (n % 2)) CHECK(c[i] == 0);
            }
}

TEST_CASE("ladder relation between consecutive orders") {
    for (int eps : {-1, 1})
        for (long long s = 0; s <= 4; ++s)
            for (long long n = 1; n <= 40; ++n) {
                CHECK(poly_derivative(signed_u_explicit(n, s, eps)) ==
                      signed_u_explicit(n - 1, s + 1, eps).scaled(make_int(2 * (s + 1))));
                CHECK(poly_derivative(monic_signed_u(n, s, eps)) ==
                      monic_signed_u(n - 1, s + 1, eps).scaled(make_int(s + 1)));
            }
}

TEST_CASE("signed family equals the polynomial-coefficient series expansion") {
    // Spot check here; the full n <= 50, s <= 5 sweep runs in the
    // acceptance suite.
    for (int eps : {-1, 1})
        for (long long s = 0; s <= 2; ++s) {
            const std::vector<IntPolynomial> num{IntPolynomial(1)};
            const std::vector<IntPolynomial> den{IntPolynomial(1), IntPolynomial{0, -2},
                                                 IntPolynomial(-eps)};
            const auto exp =
                expand_rational<IntPolynomial>(num, den, static_cast<unsigned long>(s) + 1, 16);
            for (long long n = 0; n < 16; ++n)
                CHECK(signed_u_explicit(n, s, eps) == exp.coeff(static_cast<std::size_t>(n)));
        }
}

TEST_CASE("poly_eval and poly_derivative examples") {
    CHECK(poly_eval(IntPolynomial{-1, 0, 4}, 1) == 3);
    CHECK(poly_eval(IntPolynomial{0}, 12345) == 0);
    CHECK(poly_eval(IntPolynomial{-2, 0, 3}, 3) == 25);
    CHECK(poly_derivative(IntPolynomial{1}) == IntPolynomial());
    CHECK(poly_derivative(IntPolynomial{0, 2}) == IntPolynomial{2});
    CHECK(poly_derivative(IntPolynomial{-1, 0, 4}) == IntPolynomial{0, 8});
}

TEST_CASE("polynomial ring sanity") {
    CHECK(IntPolynomial{0} == IntPolynomial());
    CHECK(IntPolynomial{1, 0, 0} == IntPolynomial{1});
    CHECK(IntPolynomial{-1, 1} * IntPolynomial{1, 1} == IntPolynomial{-1, 0, 1});
    CHECK(IntPolynomial{1, 2}.degree() == 1);
    CHECK(IntPolynomial().degree() == -1);
    CHECK(IntPolynomial{1, 2, 3}.coeff(7) == 0);
    CHECK(poly_pow(IntPolynomial{1, 1}, 3) == IntPolynomial{1, 3, 3, 1});
    CHECK(poly_pow(IntPolynomial{0, 5}, 0) == IntPolynomial{1});
}

TEST_CASE("cheb params validation") {
    CHECK_THROWS_AS((ChebParams{-1, 0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChebParams{0, -2, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChebParams{0, 0, 3}.validate()), std::invalid_argument);
    CHECK_NOTHROW((ChebParams{5, 2, -1}.validate()));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "fibsect/golden.hpp"
#include "fibsect/seqcore.hpp"

using namespace fibsect;

namespace {

// Independent oracle: the recursion run forwards from F_0 = 0, F_1 = 1
// (and backwards via F_n = F_{n+2} - F_{n+1}), no doubling anywhere.
Int fib_iter(long long n) {
    if (n >= 0) {
        Int a = 0, b = 1;
        for (long long i = 0; i < n; ++i) {
            Int c = a + b;
            a = b;
            b = c;
        }
        return a;
    }
    Int a = 0, b = 1;  // (F_i, F_{i+1}), walking down from i = 0
    for (long long i = 0; i > n; --i) {
        Int c = b - a;
        b = a;
        a = c;
    }
    return a;
}

Int lucas_iter(long long n) { return fib_iter(n - 1) + fib_iter(n + 1); }

}  // namespace

TEST_CASE("fib matches the stated examples") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(-2) == -1);
}

TEST_CASE("lucas matches the stated examples") {
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(3) == 4);
    CHECK(lucas(-3) == -4);
}

TEST_CASE("recursion holds across negative and positive indices") {
    for (long long n = -200; n <= 200; ++n) {
        CHECK(fib(n + 2) == fib(n + 1) + fib(n));
        CHECK(lucas(n + 2) == lucas(n + 1) + lucas(n));
    }
}

TEST_CASE("fib and lucas agree with the iterative oracle") {
    for (long long n = -80; n <= 80; ++n) {
        CHECK(fib(n) == fib_iter(n));
        CHECK(lucas(n) == lucas_iter(n));
    }
}

TEST_CASE("addition law validates the doubling formulas") {
    // F_{m+n} = F_m F_{n+1} + F_{m-1} F_n
    for (long long m = 0; m <= 60; ++m)
        for (long long n = 0; n <= 60; ++n)
            CHECK(fib(m + n) == fib(m) * fib(n + 1) + fib(m - 1) * fib(n));
}

TEST_CASE("lucas from neighbouring fibonacci numbers") {
    for (long long d = 1; d <= 30; ++d) CHECK(lucas(d) == fib(d - 1) + fib(d + 1));
}

TEST_CASE("golden ring basics") {
    const GoldenInt alpha = GoldenInt::alpha();
    const GoldenInt beta = GoldenInt::beta();
    CHECK(alpha + beta == GoldenInt(1, 0));
    CHECK(alpha * beta == GoldenInt(-1, 0));
    CHECK(golden_pow(alpha, 2) == GoldenInt(1, 1));  // phi^2 = 1 + phi
    CHECK(golden_pow(alpha, 0) == GoldenInt::unit());
    CHECK(golden_pow(beta, 3) == GoldenInt(3, -2));  // beta^3 = 2 - sqrt5 = 3 - 2 phi
    CHECK(beta == alpha.conj());
}

TEST_CASE("golden multiplication is commutative and associative on samples") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 200; ++i) {
        GoldenInt x(coef(rng), coef(rng));
        GoldenInt y(coef(rng), coef(rng));
        GoldenInt z(coef(rng), coef(rng));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * GoldenInt::unit() == x);
    }
}

TEST_CASE("binet pair matches the stated examples") {
    CHECK(binet_fib_lucas(0) == std::pair<Int, Int>(0, 2));
    CHECK(binet_fib_lucas(1) == std::pair<Int, Int>(1, 1));
    CHECK(binet_fib_lucas(7) == std::pair<Int, Int>(13, 29));
}

TEST_CASE("binet pair equals the doubling route") {
    for (long long n = 0; n <= 500; ++n) {
        const auto [f, l] = binet_fib_lucas(n);
        CHECK(f == fib(n));
        CHECK(l == lucas(n));
    }
    for (long long n = -40; n < 0; ++n) {
        const auto [f, l] = binet_fib_lucas(n);
        CHECK(f == fib(n));
        CHECK(l == lucas(n));
    }
}

TEST_CASE("decimal strings round-trip at any magnitude") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> len(1, 400);
    for (int i = 0; i < 100; ++i) {
        std::string s = (i % 2 == 0) ? "" : "-";
        const int L = len(rng);
        s += static_cast<char>('1' + digit(rng) % 9);
        for (int j = 1; j < L; ++j) s += static_cast<char>('0' + digit(rng));
        CHECK(to_decimal(from_decimal(s)) == s);
    }
    CHECK(to_decimal(from_decimal("0")) == "0");
    CHECK_THROWS_AS(from_decimal("12x"), std::invalid_argument);
    CHECK_THROWS_AS(from_decimal(""), std::invalid_argument);
}

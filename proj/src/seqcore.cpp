#include "fibsect/seqcore.hpp"

namespace fibsect {

std::pair<Int, Int> fib_pair(unsigned long long n) {
    // Walk the bits of n from the top; invariant: (a, b) = (F_k, F_{k+1})
    // for the prefix k of n consumed so far.
    Int a = 0, b = 1;
    if (n == 0) return {a, b};
    int bits = 0;
    for (unsigned long long m = n; m > 0; m >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        Int c = a * (2 * b - a);   // F_{2k}
        Int d = a * a + b * b;     // F_{2k+1}
        if ((n >> i) & 1) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return {a, b};
}

Int fib(long long n) {
    if (n >= 0) return fib_pair(static_cast<unsigned long long>(n)).first;
    unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1;
    Int f = fib_pair(m).first;
    return (m % 2 == 0) ? Int(-f) : f;
}

Int lucas(long long n) {
    // L_n = 2 F_{n+1} - F_n holds for every integer n.
    return 2 * fib(n + 1) - fib(n);
}

std::pair<Int, Int> binet_fib_lucas(long long n) {
    if (n < 0) {
        unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1;
        auto [f, l] = binet_fib_lucas(static_cast<long long>(m));
        if (m % 2 == 0) f = -f; else l = -l;
        return {f, l};
    }
    GoldenInt p = golden_pow(GoldenInt::alpha(), static_cast<unsigned long long>(n));
    return {p.b, 2 * p.a + p.b};
}

}  // namespace fibsect

#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "fibsect/int.hpp"
#include "fibsect/poly.hpp"

namespace fibsect {

template <class R>
struct ring_traits {
    static R zero() { return R(); }
    static R one() { return R(1); }
};

/**
 * TruncatedSeries<R>: the first N coefficients of a formal power series
 * over an exact coefficient ring R (Int, or IntPolynomial with the inner
 * variable kept formal).
 *
 * The truncation order N is the coefficient count and is carried by the
 * value. Indices >= N are unknown, never zero: binary operations truncate
 * to the shorter input, and nothing ever extends a series silently.
 */
template <class R>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {}

    static TruncatedSeries zero(std::size_t n) {
        return TruncatedSeries(std::vector<R>(n, ring_traits<R>::zero()));
    }

    std::size_t order() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& coeff(std::size_t i) const { return c_.at(i); }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return c_ != o.c_; }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        os << "[";
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            if (i) os << ", ";
            os << s.c_[i];
        }
        return os << "]";
    }

private:
    std::vector<R> c_;
};

// Cauchy product, truncated to the shorter input.
template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> c(n, ring_traits<R>::zero());
    for (std::size_t i = 0; i < std::min(a.order(), n); ++i) {
        if (a.coeff(i) == ring_traits<R>::zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + a.coeff(i) * b.coeff(j);
    }
    return TruncatedSeries<R>(std::move(c));
}

// a^m truncated to a's order, by binary exponentiation over series_mul;
// m = 0 gives 1 + 0 z + ... + 0 z^{N-1}.
template <class R>
TruncatedSeries<R> series_pow(TruncatedSeries<R> a, unsigned long m) {
    TruncatedSeries<R> r = TruncatedSeries<R>::zero(a.order());
    if (a.order() > 0) {
        std::vector<R> c = r.coeffs();
        c[0] = ring_traits<R>::one();
        r = TruncatedSeries<R>(std::move(c));
    }
    while (m > 0) {
        if (m & 1) r = series_mul(r, a);
        a = series_mul(a, a);
        m >>= 1;
    }
    return r;
}

// First n_terms coefficients of P / Q^m for polynomials P, Q over R given
// as dense coefficient lists. Requires Q(0) = 1 and m >= 1. Q^m is expanded
// exactly, then the coefficients follow the linear recurrence
//   c_n = P_n - sum_{k>=1} (Q^m)_k c_{n-k}.
template <class R>
TruncatedSeries<R> expand_rational(const std::vector<R>& num, const std::vector<R>& den,
                                   unsigned long m, std::size_t n_terms) {
    if (m == 0) throw std::invalid_argument("expand_rational: exponent m must be >= 1");
    if (den.empty() || !(den[0] == ring_traits<R>::one()))
        throw std::domain_error("expand_rational: denominator constant term must be 1");

    // den^m by repeated full polynomial products (degrees stay tiny here).
    std::vector<R> qm{ring_traits<R>::one()};
    for (unsigned long e = 0; e < m; ++e) {
        std::vector<R> next(qm.size() + den.size() - 1, ring_traits<R>::zero());
        for (std::size_t i = 0; i < qm.size(); ++i)
            for (std::size_t j = 0; j < den.size(); ++j)
                next[i + j] = next[i + j] + qm[i] * den[j];
        qm = std::move(next);
    }

    std::vector<R> c(n_terms, ring_traits<R>::zero());
    for (std::size_t n = 0; n < n_terms; ++n) {
        R v = n < num.size() ? num[n] : ring_traits<R>::zero();
        for (std::size_t k = 1; k < qm.size() && k <= n; ++k) v = v - qm[k] * c[n - k];
        c[n] = std::move(v);
    }
    return TruncatedSeries<R>(std::move(c));
}

inline TruncatedSeries<Int> expand_rational(const IntPolynomial& num, const IntPolynomial& den,
                                            unsigned long m, std::size_t n_terms) {
    return expand_rational<Int>(num.coeffs(), den.coeffs(), m, n_terms);
}

}  // namespace fibsect

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "fibsect/int.hpp"

namespace fibsect {

/**
 * IntPolynomial: dense integer-coefficient polynomial in one variable.
 *
 * coeffs[i] is the coefficient of x^i. Canonical form: no trailing zero
 * coefficient; the zero polynomial is the empty list (degree -1). All ring
 * operations are exact.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;

    // Constant polynomial; IntPolynomial(0) normalizes to zero.
    explicit IntPolynomial(long long constant) {
        if (constant != 0) c_.push_back(make_int(constant));
    }
    explicit IntPolynomial(const Int& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    IntPolynomial(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.push_back(make_int(v));
        normalize();
    }

    static IntPolynomial from_coeffs(std::vector<Int> coeffs) {
        IntPolynomial p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

    void set_coeff(std::size_t i, Int v) {
        if (i >= c_.size()) c_.resize(i + 1, Int(0));
        c_[i] = std::move(v);
        normalize();
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial operator+(const IntPolynomial& o) const {
        IntPolynomial r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
        r.normalize();
        return r;
    }

    IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntPolynomial();
        IntPolynomial r;
        r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        // Product of canonical nonzero polynomials has a nonzero top
        // coefficient over Z, no renormalization needed.
        return r;
    }

    IntPolynomial scaled(const Int& k) const {
        if (k == 0) return IntPolynomial();
        IntPolynomial r = *this;
        for (auto& v : r.c_) v *= k;
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
        os << "[";
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (i) os << ", ";
            os << p.c_[i];
        }
        return os << "]";
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// Exact p(y) by Horner's rule.
inline Int poly_eval(const IntPolynomial& p, const Int& y) {
    Int r = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i > 0; --i) r = r * y + c[i - 1];
    return r;
}

// Exact formal derivative.
inline IntPolynomial poly_derivative(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return IntPolynomial();
    std::vector<Int> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * c[i];
    return IntPolynomial::from_coeffs(std::move(d));
}

// p^m by binary exponentiation; m = 0 gives the constant 1.
inline IntPolynomial poly_pow(IntPolynomial p, unsigned long m) {
    IntPolynomial r(1);
    while (m > 0) {
        if (m & 1) r = r * p;
        p = p * p;
        m >>= 1;
    }
    return r;
}

}  // namespace fibsect

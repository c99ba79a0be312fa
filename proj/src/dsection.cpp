#include "fibsect/dsection.hpp"

#include <stdexcept>

#include "fibsect/chebyshev.hpp"
#include "fibsect/seqcore.hpp"

namespace fibsect {

namespace {

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

void check_step(long long d) {
    if (d < 1) throw std::invalid_argument("dsection: step d must be >= 1");
}

// Numerator pair (c0, c1) of the section generating function.
std::pair<Int, Int> numerator_pair(long long d, long long h, SequenceKind kind) {
    if (kind == SequenceKind::fibonacci)
        return {fib(h), parity_sign(h) * fib(d - h)};
    return {lucas(h), parity_sign(h - 1) * lucas(d - h)};
}

// V_k^{(s)}(L_d; eps) for k = 0..count-1, via the explicit sums.
std::vector<Int> monic_values(long long d, long long s, std::size_t count) {
    const Int y = lucas(d);
    const int eps = (d % 2 != 0) ? 1 : -1;
    std::vector<Int> vals;
    vals.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        vals.push_back(poly_eval(monic_signed_u(static_cast<long long>(k), s, eps), y));
    return vals;
}

// One closed-form coefficient, given V values indexed by k.
Int closed_sum(const SectionParams& p, SequenceKind kind, long long n,
                const std::vector<Int>& v_vals) {
    const auto [c0, c1] = numerator_pair(p.d, p.h, kind);
    Int acc = 0;
    for (long long j = 0; j <= p.s + 1; ++j) {
        if (n - j < 0) continue;
        Int term = binomial(p.s + 1, j);
        term *= int_pow(c0, static_cast<unsigned long>(p.s + 1 - j));
        term *= int_pow(c1, static_cast<unsigned long>(j));
        term *= v_vals[static_cast<std::size_t>(n - j)];
        acc += term;
    }
    return acc;
}

}  // namespace

std::string to_string(SequenceKind kind) {
    return kind == SequenceKind::fibonacci ? "fibonacci" : "lucas";
}

void SectionParams::validate() const {
    check_step(d);
    if (s < 0) throw std::invalid_argument("dsection: order s must be >= 0");
}

SectionGF section_gf(long long d, long long h, SequenceKind kind) {
    check_step(d);
    auto [c0, c1] = numerator_pair(d, h, kind);
    std::vector<Int> num{std::move(c0), std::move(c1)};
    std::vector<Int> den{Int(1), -lucas(d), Int(parity_sign(d))};
    return SectionGF{IntPolynomial::from_coeffs(std::move(num)),
                     IntPolynomial::from_coeffs(std::move(den)), kind};
}

std::vector<Int> section_terms(const SectionParams& p, SequenceKind kind, std::size_t n_terms) {
    check_step(p.d);
    std::vector<Int> out;
    out.reserve(n_terms);
    for (std::size_t n = 0; n < n_terms; ++n) {
        long long idx = p.d * static_cast<long long>(n) + p.h;
        out.push_back(kind == SequenceKind::fibonacci ? fib(idx) : lucas(idx));
    }
    return out;
}

Int conv_coeff(const SectionParams& p, long long n, SequenceKind kind) {
    p.validate();
    if (n < 0) throw std::invalid_argument("dsection: coefficient index n must be >= 0");
    return closed_sum(p, kind, n, monic_values(p.d, p.s, static_cast<std::size_t>(n) + 1));
}

std::vector<Int> conv_terms(const SectionParams& p, std::size_t n_terms, SequenceKind kind) {
    p.validate();
    const auto v_vals = monic_values(p.d, p.s, n_terms);
    std::vector<Int> out;
    out.reserve(n_terms);
    for (std::size_t n = 0; n < n_terms; ++n)
        out.push_back(closed_sum(p, kind, static_cast<long long>(n), v_vals));
    return out;
}

std::vector<Int> conv_oracle(const SectionParams& p, std::size_t n_terms, SequenceKind kind) {
    p.validate();
    TruncatedSeries<Int> base(section_terms(p, kind, n_terms));
    return series_pow(base, static_cast<unsigned long>(p.s) + 1).coeffs();
}

std::vector<Int> conv_rational(const SectionParams& p, std::size_t n_terms, SequenceKind kind) {
    p.validate();
    const SectionGF gf = section_gf(p.d, p.h, kind);
    const unsigned long m = static_cast<unsigned long>(p.s) + 1;
    return expand_rational(poly_pow(gf.num, m), gf.den, m, n_terms).coeffs();
}

Int h0_shortcut(long long d, long long s, long long n) {
    check_step(d);
    if (s < 0) throw std::invalid_argument("dsection: order s must be >= 0");
    if (n < s + 1) return 0;
    const int eps = (d % 2 != 0) ? 1 : -1;
    return int_pow(fib(d), static_cast<unsigned long>(s) + 1) *
           poly_eval(monic_signed_u(n - (s + 1), s, eps), lucas(d));
}

}  // namespace fibsect

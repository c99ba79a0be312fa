#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibsect/int.hpp"
#include "fibsect/poly.hpp"
#include "fibsect/series.hpp"

namespace fibsect {

enum class SequenceKind { fibonacci, lucas };

std::string to_string(SequenceKind kind);

/**
 * Parameters of a d-section convolution: the subsequence F_{dn+h} (or
 * L_{dn+h}) for step d >= 1 and arbitrary integer offset h, convolved to
 * order s >= 0 (the generating function is raised to the power s + 1).
 *
 * The sign eps = (-1)^{d-1} is always derived from d, never supplied by
 * callers, so the (L_d, eps) pair can't get out of sync.
 */
struct SectionParams {
    long long d = 1;
    long long h = 0;
    long long s = 0;

    void validate() const;  // throws std::invalid_argument unless d >= 1, s >= 0
    int eps() const { return (d % 2 != 0) ? 1 : -1; }
};

// Rational generating function of a d-section: num / den with
//   den = 1 - L_d z + (-1)^d z^2                    (both kinds)
//   num = F_h + (-1)^h     F_{d-h} z                (fibonacci)
//   num = L_h + (-1)^{h-1} L_{d-h} z                (lucas)
struct SectionGF {
    IntPolynomial num;
    IntPolynomial den;
    SequenceKind kind = SequenceKind::fibonacci;
};

SectionGF section_gf(long long d, long long h, SequenceKind kind);

// [F_{dn+h}] (resp. Lucas) for n = 0..n_terms-1, computed directly from
// the sequence core; the reference side of every generating-function
// identity here.
std::vector<Int> section_terms(const SectionParams& p, SequenceKind kind, std::size_t n_terms);

// Coefficient of z^n in (num/den)^{s+1} by the closed form:
//   sum_{j=0}^{s+1} C(s+1,j) c0^{s+1-j} c1^j V_{n-j}^{(s)}(L_d; eps)
// where (c0, c1) is the numerator pair of section_gf and V is the monic
// signed family evaluated at L_d. Terms with n - j < 0 contribute 0, and
// 0^0 = 1 (needed so the formula specializes correctly to h = 0).
Int conv_coeff(const SectionParams& p, long long n,
               SequenceKind kind = SequenceKind::fibonacci);

// [conv_coeff(p, n)] for n = 0..n_terms-1 (shared V evaluations hoisted).
std::vector<Int> conv_terms(const SectionParams& p, std::size_t n_terms,
                            SequenceKind kind = SequenceKind::fibonacci);

// Definitional route: series_pow(section_terms(p), s+1). Fully independent
// of the polynomial closed forms; this is the brute-force oracle.
std::vector<Int> conv_oracle(const SectionParams& p, std::size_t n_terms,
                             SequenceKind kind = SequenceKind::fibonacci);

// Third route through the series module: expand_rational(num^{s+1}, den, s+1).
std::vector<Int> conv_rational(const SectionParams& p, std::size_t n_terms,
                               SequenceKind kind = SequenceKind::fibonacci);

// h = 0 specialization: F_d^{s+1} V_{n-(s+1)}^{(s)}(L_d; eps), which is 0
// for n < s+1 (the numerator carries the factor z^{s+1}). Equals
// conv_coeff({d, 0, s}, n) everywhere.
Int h0_shortcut(long long d, long long s, long long n);

}  // namespace fibsect

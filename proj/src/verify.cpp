#include "fibsect/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "fibsect/chebyshev.hpp"
#include "fibsect/dsection.hpp"
#include "fibsect/series.hpp"

namespace fibsect {

namespace {

constexpr std::size_t kPropTerms = 64;
constexpr std::size_t kTheoremTerms = 40;

void record(VerifyReport& rep, bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) {
        ++rep.failed;
        rep.failures.push_back(what);
    }
}

std::string case_tag(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

}  // namespace

VerifyReport verify_prop(const VerifyOptions& opt) {
    VerifyReport rep{"prop", 0, 0, {}};
    const long long max_d = opt.max_d > 0 ? opt.max_d : 12;
    for (long long d = 1; d <= max_d; ++d) {
        for (long long h = -3; h <= d + 3; ++h) {
            for (SequenceKind kind : {SequenceKind::fibonacci, SequenceKind::lucas}) {
                const SectionGF gf = section_gf(d, h, kind);
                const auto expanded = expand_rational(gf.num, gf.den, 1, kPropTerms).coeffs();
                const auto direct = section_terms({d, h, 0}, kind, kPropTerms);
                record(rep, expanded == direct,
                       case_tag({{"d", d}, {"h", h}}) + " kind=" + to_string(kind));
            }
        }
    }
    return rep;
}

VerifyReport verify_theorem(const VerifyOptions& opt) {
    VerifyReport rep{"theorem", 0, 0, {}};
    const long long max_d = opt.max_d > 0 ? opt.max_d : 8;
    const long long max_s = opt.max_s >= 0 ? opt.max_s : 4;
    for (long long d = 1; d <= max_d; ++d) {
        for (long long h = 0; h <= d - 1; ++h) {
            for (long long s = 0; s <= max_s; ++s) {
                const SectionParams p{d, h, s};
                const auto closed = conv_terms(p, kTheoremTerms);
                const auto oracle = conv_oracle(p, kTheoremTerms);
                const auto rational = conv_rational(p, kTheoremTerms);
                record(rep, closed == oracle && closed == rational,
                       case_tag({{"d", d}, {"h", h}, {"s", s}}));
            }
        }
    }
    return rep;
}

VerifyReport verify_chebyshev(const VerifyOptions& opt) {
    VerifyReport rep{"chebyshev", 0, 0, {}};
    const long long max_s = opt.max_s >= 0 ? opt.max_s : 5;
    constexpr long long kMaxN = 50;

    for (long long n = 0; n <= 60; ++n)
        record(rep, gegen_u_explicit(n, 0) == cheb_u(n), case_tag({{"n", n}, {"s", 0}}));

    // Series oracle with x kept formal: coefficients of
    // 1/(1 - 2tx - eps t^2)^{s+1} over the polynomial ring.
    for (long long s = 0; s <= max_s; ++s) {
        for (int eps : {-1, 1}) {
            const std::vector<IntPolynomial> num{IntPolynomial(1)};
            const std::vector<IntPolynomial> den{IntPolynomial(1), IntPolynomial{0, -2},
                                                 IntPolynomial(-eps)};
            const auto expansion =
                expand_rational<IntPolynomial>(num, den, static_cast<unsigned long>(s) + 1,
                                               kMaxN + 1);
            for (long long n = 0; n <= kMaxN; ++n)
                record(rep,
                       signed_u_explicit(n, s, eps) ==
                           expansion.coeff(static_cast<std::size_t>(n)),
                       case_tag({{"n", n}, {"s", s}, {"eps", eps}}));
        }
    }
    return rep;
}

VerifyReport verify_ladder(const VerifyOptions& opt) {
    VerifyReport rep{"ladder", 0, 0, {}};
    const long long max_s = opt.max_s >= 0 ? opt.max_s : 4;
    for (long long n = 1; n <= 40; ++n) {
        for (long long s = 0; s <= max_s; ++s) {
            for (int eps : {-1, 1}) {
                const Int factor = make_int(2 * (s + 1));
                const bool x_ok = poly_derivative(signed_u_explicit(n, s, eps)) ==
                                  signed_u_explicit(n - 1, s + 1, eps).scaled(factor);
                const bool y_ok = poly_derivative(monic_signed_u(n, s, eps)) ==
                                  monic_signed_u(n - 1, s + 1, eps).scaled(make_int(s + 1));
                record(rep, x_ok && y_ok, case_tag({{"n", n}, {"s", s}, {"eps", eps}}));
            }
        }
    }
    return rep;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "prop") return verify_prop(opt);
    if (name == "theorem") return verify_theorem(opt);
    if (name == "chebyshev") return verify_chebyshev(opt);
    if (name == "ladder") return verify_ladder(opt);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace fibsect

#pragma once

#include <string>
#include <vector>

namespace fibsect {

// Sweep bounds for the verification suites; -1 keeps a suite's default.
struct VerifyOptions {
    long long max_d = -1;
    long long max_s = -1;
};

struct VerifyReport {
    std::string suite;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // one line per failing case, sweep order

    bool ok() const { return failed == 0; }
};

// Generating-function identity of the d-section: the 64-term expansion of
// section_gf equals the directly computed section_terms, for
// d in [1, max_d (12)], h in [-3, d+3], both sequence kinds.
VerifyReport verify_prop(const VerifyOptions& opt = {});

// Convolution identity: closed form, series-power oracle and rational
// expansion agree on the first 40 coefficients, for d in [1, max_d (8)],
// h in [0, d-1], s in [0, max_s (4)].
VerifyReport verify_theorem(const VerifyOptions& opt = {});

// Explicit polynomial sums against the series expansion with formal
// polynomial coefficients (n <= 50, s <= max_s (5), both signs), plus the
// explicit/recursion agreement at order 0 (n <= 60).
VerifyReport verify_chebyshev(const VerifyOptions& opt = {});

// Derivative ladder: d/dx of the order-s polynomial equals
// 2(s+1) times the order-(s+1) polynomial one index down (factor s+1 in
// the monic variant), for n in [1, 40], s in [0, max_s (4)], both signs.
VerifyReport verify_ladder(const VerifyOptions& opt = {});

// Dispatch by suite name ("prop", "theorem", "chebyshev", "ladder");
// throws std::invalid_argument for anything else.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace fibsect

#pragma once

#include <utility>

#include "fibsect/golden.hpp"
#include "fibsect/int.hpp"

namespace fibsect {

// (F_n, F_{n+1}) for n >= 0 by fast doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
// O(log n) big-integer multiplications.
std::pair<Int, Int> fib_pair(unsigned long long n);

// F_n for any integer index; F_{-n} = (-1)^{n+1} F_n.
Int fib(long long n);

// L_n for any integer index (L_0 = 2, L_1 = 1); L_{-n} = (-1)^n L_n.
Int lucas(long long n);

// (F_n, L_n) read off the exact golden-ring power alpha^n = p + q*phi:
// F_n = q and L_n = 2p + q. Independent of the doubling path, so the two
// routes cross-check each other. Negative n delegates to the extensions.
std::pair<Int, Int> binet_fib_lucas(long long n);

}  // namespace fibsect

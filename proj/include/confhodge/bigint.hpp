#pragma once

#include <gmpxx.h>
#include <string>

namespace confhodge {

// Every quantity computed by this project is an exact integer; there is no
// floating point anywhere. GMP carries the arbitrary-precision arithmetic.
using Int = mpz_class;

// Binomial coefficient with the combinatorial convention C(n,k) = 0 for
// k < 0 or k > n. Requires n >= 0.
Int binomial(long n, long k);

std::string to_string(const Int& v);

}  // namespace confhodge

#include "confhodge/bigint.hpp"

#include <stdexcept>

namespace confhodge {

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

std::string to_string(const Int& v) {
    return v.get_str();
}

}  // namespace confhodge

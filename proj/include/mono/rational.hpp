// Exact scalar arithmetic. Everything in this library is built on GMP
// rationals; there is no floating point anywhere.
#pragma once

#include <gmpxx.h>
#include <string>

namespace mono {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_num_str(const Rat& r) { return r.get_num().get_str(); }
inline std::string rat_den_str(const Rat& r) { return r.get_den().get_str(); }

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

} // namespace mono

#pragma once

// Exact integer layer. Everything countable in this library is a QInt;
// no floating point is used anywhere (fractional comparisons are done by
// cross-multiplication at the call sites).

#include <gmpxx.h>

#include <string>

namespace qgrass {

using QInt = mpz_class;

inline QInt ipow(const QInt& base, unsigned long exp) {
    QInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline QInt ipow(long base, unsigned long exp) {
    QInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

// Ordinary binomial coefficient, C(n,k) = 0 for k > n.
inline QInt binom(unsigned long n, unsigned long k) {
    QInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_decimal(const QInt& v) { return v.get_str(); }

} // namespace qgrass

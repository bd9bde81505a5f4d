#pragma once

#include <gmpxx.h>
#include <string>

namespace sgspec {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// floor(sqrt(v)) for v >= 0
inline Int isqrt(const Int& v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// r rounded half-away-from-zero to a fixed number of decimal places.
inline std::string decimal_digits(const Rat& r, int places) {
    Int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Rat scaled = r * Rat(scale);
    Rat shifted = scaled + Rat(sgn(scaled) >= 0 ? 1 : -1, 2);
    Int rounded;
    mpz_tdiv_q(rounded.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    bool neg = rounded < 0;
    std::string body = (neg ? Int(-rounded) : rounded).get_str();
    while (static_cast<int>(body.size()) <= places) body.insert(body.begin(), '0');
    body.insert(body.size() - static_cast<std::size_t>(places), ".");
    return (neg ? "-" : "") + body;
}

} // namespace sgspec

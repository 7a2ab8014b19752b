#pragma once
/*
 * Exact rational scalars.  GMP's mpq_class already maintains the canonical
 * form we rely on everywhere (numerator/denominator coprime, denominator
 * positive), so the project type is a thin alias plus a few checked helpers.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pf/errors.hpp"

namespace pf {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Checked constructor: rejects a zero denominator before GMP would abort.
inline BigRational mk_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational mk_rational(long num, long den = 1) {
    return mk_rational(BigInt(num), BigInt(den));
}

// Parses "a" or "a/b" (optional leading '-', no whitespace).
inline BigRational parse_rational(const std::string& text) {
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw ParseError("invalid rational literal '" + text + "'");
    }
    BigRational q(raw);
    mpq_clear(raw);
    if (q.get_den() == 0) throw ParseError("rational literal with zero denominator '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// q^e for integer e (negative e requires q != 0).
inline BigRational pow_rational(const BigRational& q, long e) {
    if (e == 0) return BigRational(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && q == 0) throw Error("zero raised to a negative power");
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), ue);
    return invert ? mk_rational(den, num) : mk_rational(num, den);
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Multinomial coefficient (sum parts)! / prod parts_i!.
inline BigInt multinomial(const std::vector<unsigned long>& parts) {
    unsigned long total = 0;
    for (auto p : parts) total += p;
    BigInt r = factorial(total);
    for (auto p : parts) r /= factorial(p);
    return r;
}

}  // namespace pf

#ifndef SVLAB_RATIONAL_HPP
#define SVLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "svlab/errors.hpp"

namespace svlab {

using Rat = mpq_class;
using Int = mpz_class;

/// Canonical "p" or "p/q" form, q > 0, gcd(p,q) = 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

/**
 * Parse "p" or "p/q" (optional leading sign on p, q a positive natural).
 * `offset` is added to reported byte positions so callers embedding a
 * rational inside a larger string get absolute offsets.
 */
inline Rat rat_parse(const std::string& text, std::size_t offset = 0) {
    if (text.empty())
        throw ParseError("empty rational literal", offset);
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected digit in rational literal", offset + i);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size()) {
        if (text[i] != '/')
            throw ParseError("unexpected character in rational literal", offset + i);
        ++i;
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected digit after '/'", offset + i);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size())
            throw ParseError("unexpected character in rational literal", offset + i);
    }
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'", offset);
    r.canonicalize();
    if (r.get_den() == 0)
        throw ParseError("zero denominator in rational literal", offset);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(), e);
    num.canonicalize();
    return num;
}

inline Int int_pow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/**
 * Rational to double, safe against exponent overflow: the value is scaled
 * by a power of two before conversion and rescaled with ldexp.  Values
 * whose magnitude exceeds the double range still saturate, but anything
 * representable converts accurately.
 */
inline double rat_to_double(const Rat& r) {
    if (r == 0) return 0.0;
    long nbits = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2));
    long dbits = static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
    long shift = nbits - dbits;
    if (shift > -900 && shift < 900) return r.get_d();
    Rat scaled;
    if (shift >= 900)
        mpq_div_2exp(scaled.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(shift));
    else
        mpq_mul_2exp(scaled.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-shift));
    return std::ldexp(scaled.get_d(), static_cast<int>(shift));
}

/// Fixed 17-significant-digit form used in reports and CSVs.
inline std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

} // namespace svlab

#endif

// bigint.hpp -- arbitrary-precision integers and canonical rationals.
//
// BigInt/BigRat are GMP types; everything downstream assumes no silent
// overflow at any size (lcm values and unit-fraction denominators grow
// multiplicatively) and that BigRat is always in canonical form:
// denominator > 0, gcd(|num|, den) = 1.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace starmat {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Exact quotient; quotients in Bareiss elimination and Faddeev-LeVerrier
// are integral by construction, so inexact input is a logic error.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("divexact: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("divexact: " + a.get_str() + " not divisible by " + b.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Canonical rational from a numerator/denominator pair.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline const BigInt& rat_num(const BigRat& q) { return q.get_num(); }
inline const BigInt& rat_den(const BigRat& q) { return q.get_den(); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt parse_bigint(const std::string& text) {
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_bigint: not a decimal integer: '" + text + "'");
    return v;
}

inline BigInt vector_gcd(const std::vector<BigInt>& values) {
    BigInt g = 0;
    for (const BigInt& v : values) g = big_gcd(g, v);
    return g;
}

inline std::size_t to_size(const BigInt& v) {
    if (v < 0 || !v.fits_ulong_p())
        throw std::domain_error("to_size: value out of range: " + v.get_str());
    return static_cast<std::size_t>(v.get_ui());
}

}  // namespace starmat

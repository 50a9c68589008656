#pragma once

#include <gmpxx.h>

#include <string>

namespace ccn {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool isInteger(const Rational& q) {
    return q.get_den() == 1;
}

// Largest integer <= q.
inline BigInt ratFloor(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Smallest integer >= q.
inline BigInt ratCeil(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// n * 2^k without intermediate overflow.
inline BigInt shiftLeft(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline std::string toString(const BigInt& v) {
    return v.get_str();
}

inline std::string toString(const Rational& v) {
    return v.get_str();
}

inline bool fitsDouble53(const BigInt& v) {
    static const BigInt kLimit = shiftLeft(BigInt(1), 53);
    BigInt a;
    mpz_abs(a.get_mpz_t(), v.get_mpz_t());
    return a <= kLimit;
}

}  // namespace ccn

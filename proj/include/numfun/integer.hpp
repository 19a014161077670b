#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace numfun {

// Arbitrary precision integers and rationals. mpq_class keeps num/den
// reduced with den > 0 as long as every constructor path canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is handed a zero where a unit is required.
class ZeroInputError : public Error {
public:
    using Error::Error;
};

class NotPrimeError : public Error {
public:
    using Error::Error;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);
Integer abs(const Integer& a);
Rational abs(const Rational& a);

/// Canonical rational num/den (throws on den == 0).
Rational make_rational(const Integer& num, const Integer& den);

bool is_prime(const Integer& n);

/// Exponent of the prime p in n != 0.
long valuation(const Integer& n, const Integer& p);
long valuation(const Rational& x, const Integer& p);

struct IntegerFactorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;  // primes strictly increasing

    Integer product() const;
};

/// Trial division up to 10^6, then Brent's variant of Pollard rho on the
/// cofactor. Intended for |n| < 2^128.
IntegerFactorization factor_integer(const Integer& n);

/// Sorted distinct primes dividing n (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

inline bool fits_int64(const Integer& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

}  // namespace numfun

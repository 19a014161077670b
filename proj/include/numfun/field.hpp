#pragma once

#include "numfun/integer.hpp"
#include "numfun/prime_field.hpp"

// Uniform element access used by the generic polynomial and series code.
// A coefficient type K provides is_zero, zero_like, one_like and inverse,
// found by argument-dependent lookup.

namespace numfun {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational inverse(const Rational& x)
{
    if (sgn(x) == 0)
        throw ZeroInputError("inverse of zero rational");
    return 1 / x;
}

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp zero_like(const Fp& x) { return x.zero_like(); }
inline Fp one_like(const Fp& x) { return x.one_like(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }

/// Embeds a machine integer into the prime field or Q of `like`.
inline Rational embed(const Rational&, long n) { return Rational(n); }
inline Fp embed(const Fp& like, long n)
{
    auto m = static_cast<long>(like.modulus());
    long r = n % m;
    if (r < 0)
        r += m;
    return Fp(static_cast<std::uint64_t>(r), like.modulus());
}

namespace detail {
// Unqualified so that argument-dependent lookup finds is_zero for coefficient
// types declared after the generic containers.
template <class K>
bool coeff_is_zero(const K& c)
{
    return is_zero(c);
}
}  // namespace detail

}  // namespace numfun

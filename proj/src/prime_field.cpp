#include "numfun/prime_field.hpp"

namespace numfun {

PrimeField::PrimeField(const Integer& p)
{
    if (!is_prime(p))
        throw NotPrimeError("modulus " + p.get_str() + " is not prime");
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63)
        throw Error("prime field modulus exceeds 63 bits");
    p_ = mpz_get_ui(p.get_mpz_t());
}

Fp PrimeField::operator()(std::int64_t v) const
{
    std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0)
        r += m;
    return Fp(static_cast<std::uint64_t>(r), p_);
}

Fp PrimeField::from(const Integer& v) const
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return Fp(mpz_get_ui(r.get_mpz_t()), p_);
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace numfun

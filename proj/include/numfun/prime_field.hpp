#pragma once

#include <cstdint>
#include <string>

#include "numfun/integer.hpp"

namespace numfun {

/// Element of F_p with the modulus carried alongside the value.
/// Moduli are limited to 63 bits; products go through unsigned __int128.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }

    Fp operator+(const Fp& o) const
    {
        std::uint64_t s = v_ + o.v_;
        if (s >= p_)
            s -= p_;
        return raw(s);
    }
    Fp operator-(const Fp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
    Fp operator*(const Fp& o) const
    {
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_));
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp pow(std::uint64_t e) const
    {
        Fp base = *this, r = one_like();
        while (e) {
            if (e & 1)
                r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Fp inverse() const
    {
        if (v_ == 0)
            throw ZeroInputError("inverse of zero in F_p");
        return pow(p_ - 2);
    }

private:
    Fp raw(std::uint64_t v) const
    {
        Fp r;
        r.v_ = v;
        r.p_ = p_;
        return r;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

/// Validated prime modulus; the factory for Fp elements.
class PrimeField {
public:
    explicit PrimeField(const Integer& p);
    explicit PrimeField(std::uint64_t p) : PrimeField(Integer(static_cast<unsigned long>(p))) {}

    std::uint64_t modulus() const { return p_; }
    Fp operator()(std::int64_t v) const;
    Fp from(const Integer& v) const;
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

private:
    std::uint64_t p_;
};

std::string to_string(const Fp& x);

}  // namespace numfun

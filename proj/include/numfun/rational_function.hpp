#pragma once

#include <optional>
#include <string>
#include <utility>

#include "numfun/polynomial.hpp"

namespace numfun {

/// num/den over a field with gcd(num, den) = 1 and den monic.
template <class K>
class RationalFunction {
public:
    using Poly = Polynomial<K>;

    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.one())) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction constant(const K& c) { return RationalFunction(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const K& one() const { return num_.one(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

    RationalFunction operator+(const RationalFunction& o) const
    {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const
    {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    RationalFunction operator*(const RationalFunction& o) const
    {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const
    {
        if (o.is_zero())
            throw ZeroInputError("division by the zero rational function");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction pow(long e) const
    {
        if (e < 0)
            return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
        return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }
    RationalFunction derivative() const
    {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Value at x, or nullopt at a pole.
    std::optional<K> evaluate(const K& x) const
    {
        K d = den_.evaluate(x);
        if (numfun::is_zero(d))
            return std::nullopt;
        return K(num_.evaluate(x) / d);
    }

private:
    void normalize()
    {
        if (den_.is_zero())
            throw ZeroInputError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.one());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K lead = den_.leading();
        if (lead != num_.one()) {
            K inv = inverse(lead);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

using QRatFunc = RationalFunction<Rational>;
using FpRatFunc = RationalFunction<Fp>;

template <class K>
std::string to_string(const RationalFunction<K>& f, const std::string& var = "t")
{
    if (f.is_polynomial())
        return to_string(f.num().scaled(inverse(f.den().leading())), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace numfun

#pragma once

#include <memory>
#include <string>

#include "numfun/polynomial.hpp"

namespace numfun {

/// Element of Q[x]/(S) for an irreducible S, i.e. of the residue field of
/// the closed point S = 0 on the rational line. All elements of one field
/// share the modulus.
class NumberFieldElement {
public:
    NumberFieldElement(QPoly value, std::shared_ptr<const QPoly> modulus)
        : mod_(std::move(modulus)), v_(std::move(value) % *mod_)
    {
    }

    /// The class of x.
    static NumberFieldElement generator(std::shared_ptr<const QPoly> modulus)
    {
        return NumberFieldElement(qpoly({0, 1}), std::move(modulus));
    }

    const QPoly& value() const { return v_; }
    const std::shared_ptr<const QPoly>& modulus() const { return mod_; }
    int degree() const { return mod_->degree(); }
    bool is_zero() const { return v_.is_zero(); }

    NumberFieldElement lift(const Rational& q) const { return NumberFieldElement(QPoly::constant(q), mod_); }

    NumberFieldElement operator+(const NumberFieldElement& o) const { return {v_ + o.v_, mod_}; }
    NumberFieldElement operator-(const NumberFieldElement& o) const { return {v_ - o.v_, mod_}; }
    NumberFieldElement operator-() const { return {-v_, mod_}; }
    NumberFieldElement operator*(const NumberFieldElement& o) const { return {v_ * o.v_, mod_}; }
    bool operator==(const NumberFieldElement& o) const { return v_ == o.v_; }

    NumberFieldElement inverse() const
    {
        if (is_zero())
            throw ZeroInputError("inverse of zero in a number field");
        auto [g, s, t] = poly_xgcd(v_, *mod_);
        (void)t;
        if (g.degree() != 0)
            throw Error("modulus is not irreducible");
        return {s, mod_};
    }

    /// Trace to Q: trace of multiplication by this element on 1, x, ..., x^(d-1).
    Rational trace() const
    {
        Rational tr(0);
        int d = degree();
        for (int i = 0; i < d; ++i) {
            QPoly col = (v_ * QPoly::monomial(Rational(1), i)) % *mod_;
            tr += col.coeff(i);
        }
        return tr;
    }

private:
    std::shared_ptr<const QPoly> mod_;
    QPoly v_;
};

inline bool is_zero(const NumberFieldElement& x) { return x.is_zero(); }
inline NumberFieldElement zero_like(const NumberFieldElement& x) { return x.lift(Rational(0)); }
inline NumberFieldElement one_like(const NumberFieldElement& x) { return x.lift(Rational(1)); }
inline NumberFieldElement inverse(const NumberFieldElement& x) { return x.inverse(); }
inline NumberFieldElement embed(const NumberFieldElement& like, long n) { return like.lift(Rational(n)); }
inline std::string to_string(const NumberFieldElement& x) { return "[" + to_string(x.value(), "x") + "]"; }

}  // namespace numfun

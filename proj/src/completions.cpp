#include "numfun/completions.hpp"

#include <sstream>

namespace numfun {

Rational PAdicExpansion::partial_sum() const
{
    Rational s(0);
    if (zero)
        return s;
    for (std::size_t i = 0; i < digits.size(); ++i)
        s += Rational(digits[i]) * pow(Rational(p), start + static_cast<long>(i));
    return s;
}

PAdicExpansion p_adic_digits(const Rational& f, const Integer& p, long n)
{
    if (!is_prime(p))
        throw NotPrimeError(to_string(p) + " is not prime");
    if (n < 0)
        throw Error("negative precision");
    PAdicExpansion e;
    e.p = p;
    e.precision = n;
    if (sgn(f) == 0) {
        e.zero = true;
        return e;
    }
    e.start = valuation(f, p);
    Rational u = f * pow(Rational(p), -e.start);
    for (long i = 0; i < n; ++i) {
        // digit = num * den^-1 mod p; den is a p-adic unit
        Integer inv;
        mpz_invert(inv.get_mpz_t(), u.get_den_mpz_t(), p.get_mpz_t());
        Integer a = Integer(u.get_num() * inv) % p;
        if (a < 0)
            a += p;
        e.digits.push_back(a);
        u = Rational((u - Rational(a)) / Rational(p));
    }
    return e;
}

FpRatFunc FunctionFieldExpansion::partial_sum() const
{
    const Fp& one = P.one();
    FpRatFunc s = FpRatFunc::constant(zero_like(one));
    if (zero)
        return s;
    FpRatFunc Pf(P);
    for (std::size_t i = 0; i < digits.size(); ++i)
        s = s + FpRatFunc(digits[i]) * Pf.pow(start + static_cast<long>(i));
    return s;
}

FunctionFieldExpansion p_adic_digits(const FpRatFunc& F, const FpPoly& P, long n)
{
    function_field_point(P);  // validates
    if (F.one().modulus() != P.one().modulus())
        throw WorldMismatchError("function and point live over different prime fields");
    if (n < 0)
        throw Error("negative precision");
    FunctionFieldExpansion e;
    e.P = P;
    e.precision = n;
    if (F.is_zero()) {
        e.zero = true;
        return e;
    }
    e.start = order_at(F.num(), P) - order_at(F.den(), P);
    FpRatFunc u = F * FpRatFunc(P).pow(-e.start);
    for (long i = 0; i < n; ++i) {
        auto [g, s, t] = poly_xgcd(u.den(), P);
        (void)t;
        // s * den = 1 mod P
        FpPoly a = (u.num() * s) % P;
        e.digits.push_back(a);
        u = (u - FpRatFunc(a)) / FpRatFunc(P);
    }
    return e;
}

QRatFunc LaurentExpansion::partial_sum() const
{
    QRatFunc s = QRatFunc::constant(Rational(0));
    if (zero)
        return s;
    // local parameter: t - t0, or 1/t at infinity
    QRatFunc u = center ? QRatFunc(qpoly({0, 1}) - QPoly::constant(*center))
                        : QRatFunc(QPoly::constant(Rational(1)), qpoly({0, 1}));
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        s = s + QRatFunc::constant(coefficients[i]) * u.pow(start + static_cast<long>(i));
    return s;
}

LaurentExpansion laurent_at(const QRatFunc& F, const std::optional<Rational>& t0, long n)
{
    if (n < 0)
        throw Error("negative precision");
    LaurentExpansion e;
    e.center = t0;
    e.precision = n;
    if (F.is_zero()) {
        e.zero = true;
        return e;
    }
    auto s = t0 ? series_at(F, *t0, n) : series_at_infinity(F, n);
    e.start = s.start();
    for (long i = 0; i < n; ++i)
        e.coefficients.push_back(s.coefficient(e.start + i));
    return e;
}

Rational metric(const Rational& x, const Rational& y, const Place& v)
{
    Rational d = x - y;
    if (sgn(d) == 0)
        return Rational(0);
    return norm(d, v);
}

Rational metric(const FpRatFunc& x, const FpRatFunc& y, const Place& v)
{
    FpRatFunc d = x - y;
    if (d.is_zero())
        return Rational(0);
    return norm(d, v);
}

Rational metric(const QRatFunc& x, const QRatFunc& y, const Place& v, const Rational& c)
{
    QRatFunc d = x - y;
    if (d.is_zero())
        return Rational(0);
    return norm(d, v, c);
}

std::string to_string(const PAdicExpansion& e)
{
    if (e.zero)
        return "0";
    std::ostringstream out;
    out << "start " << e.start << ", digits [";
    for (std::size_t i = 0; i < e.digits.size(); ++i)
        out << (i ? "," : "") << e.digits[i];
    out << "]";
    return out.str();
}

std::string to_string(const LaurentExpansion& e)
{
    if (e.zero)
        return "0";
    std::ostringstream out;
    out << "start " << e.start << ", coefficients [";
    for (std::size_t i = 0; i < e.coefficients.size(); ++i)
        out << (i ? "," : "") << to_string(e.coefficients[i]);
    out << "]";
    return out.str();
}

}  // namespace numfun

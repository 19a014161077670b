#pragma once

#include <optional>
#include <vector>

#include "numfun/laurent_series.hpp"
#include "numfun/places.hpp"

namespace numfun {

/// f = sum_i digits[i] p^(start + i) + O(p^(start + precision)).
struct PAdicExpansion {
    Integer p;
    long start = 0;
    std::vector<Integer> digits;  ///< each in [0, p)
    long precision = 0;
    bool zero = false;  ///< sentinel for f = 0: no digits, start meaningless

    /// The truncated sum as an exact rational.
    Rational partial_sum() const;
};

PAdicExpansion p_adic_digits(const Rational& f, const Integer& p, long n);

/// Expansion of F in F_p(t) in powers of the irreducible P, with digits of
/// degree < deg P.
struct FunctionFieldExpansion {
    FpPoly P{Fp(1, 2)};
    long start = 0;
    std::vector<FpPoly> digits;
    long precision = 0;
    bool zero = false;

    FpRatFunc partial_sum() const;
};

FunctionFieldExpansion p_adic_digits(const FpRatFunc& F, const FpPoly& P, long n);

/// Laurent expansion of a rational function over Q at t0, or at infinity in
/// powers of 1/t when center is empty.
struct LaurentExpansion {
    std::optional<Rational> center;
    long start = 0;
    std::vector<Rational> coefficients;
    long precision = 0;
    bool zero = false;

    /// sum a_i (t - t0)^(start+i), or sum a_i t^-(start+i) at infinity.
    QRatFunc partial_sum() const;
};

LaurentExpansion laurent_at(const QRatFunc& F, const std::optional<Rational>& t0, long n);

/// Valuation metric rho(x, y) = base^(-v(x - y)); 0 when x = y.
/// Q: base p at a finite prime, |x - y| at the archimedean place.
Rational metric(const Rational& x, const Rational& y, const Place& v);
/// F_p(t): base p^deg P at a point, p at infinity.
Rational metric(const FpRatFunc& x, const FpRatFunc& y, const Place& v);
/// Rational-coefficient line: base c.
Rational metric(const QRatFunc& x, const QRatFunc& y, const Place& v, const Rational& c = Rational(2));

std::string to_string(const PAdicExpansion& e);
std::string to_string(const LaurentExpansion& e);

}  // namespace numfun

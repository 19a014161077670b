#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numfun/laurent_series.hpp"
#include "numfun/places.hpp"

namespace numfun {

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(const Integer& a, const Integer& p);

/// Local square class of a nonzero rational at p: its valuation and its unit
/// part modulo p (odd p) or modulo 8 (p = 2).
struct SquareClass {
    long valuation = 0;
    long unit = 1;
};

SquareClass square_class(const Rational& a, long p);

/// Quadratic Hilbert symbol (a, b)_v at a finite prime or the real place,
/// from the valuation/Legendre closed form (mod-8 form at 2).
int hilbert_quadratic(const Rational& a, const Rational& b, const Place& v);
int hilbert_closed_form(long p, const SquareClass& a, const SquareClass& b);

/// Independent solvability oracle: searches for a primitive p-adic solution of
/// z^2 = a x^2 + b y^2. Memoized by square class.
int hilbert_oracle(const Rational& a, const Rational& b, const Place& v);
int hilbert_oracle_classes(long p, const SquareClass& a, const SquareClass& b);

struct HilbertProductWitness {
    std::vector<std::string> places;  ///< where (a, b)_v = -1
    std::vector<std::pair<std::string, int>> symbols;  ///< every place that was evaluated
    bool holds = false;  ///< even number of -1
};

HilbertProductWitness hilbert_product_check(const Rational& a, const Rational& b);

struct GaussReciprocityWitness {
    int legendre_ab = 0;  ///< (a/b)
    int legendre_ba = 0;  ///< (b/a)
    int sign = 0;         ///< (-1)^((a-1)/2 (b-1)/2)
    int hilbert_at_a = 0;
    int hilbert_at_b = 0;
    int hilbert_at_2 = 0;
    bool direct_holds = false;   ///< (a/b)(b/a) == sign
    bool hilbert_holds = false;  ///< the product formula for (a, b) reduces to the same identity
    bool holds() const { return direct_holds && hilbert_holds; }
};

GaussReciprocityWitness gauss_reciprocity_check(const Integer& a, const Integer& b);

/// Tame symbol (-1)^(mn) f^(-n) g^m evaluated at u = 0, m = ord f, n = ord g.
template <class K>
K tame_symbol(const LaurentSeries<K>& f, const LaurentSeries<K>& g)
{
    if (f.is_zero() || g.is_zero())
        throw ZeroInputError("tame symbol of zero");
    long m = f.order(), n = g.order();
    K lf = f.coefficients().front(), lg = g.coefficients().front();
    K r = one_like(lf);
    auto power = [](K base, long e) {
        K acc = one_like(base);
        if (e < 0) {
            base = inverse(base);
            e = -e;
        }
        for (; e > 0; --e)
            acc = K(acc * base);
        return acc;
    };
    r = K(power(lf, -n) * power(lg, m));
    if ((m * n) % 2 != 0)
        r = K(-r);
    return r;
}

/// Tame symbol of rational functions at t = t0, or at infinity when empty.
Rational tame_symbol(const QRatFunc& f, const QRatFunc& g, const std::optional<Rational>& t0);

/// Coefficient of u^-1.
template <class K>
K residue(const LaurentSeries<K>& omega)
{
    return omega.residue();
}

/// Residue of f dg at t0, or at infinity when t0 is empty.
Rational residue(const QRatFunc& f, const QRatFunc& g, const std::optional<Rational>& t0);

struct ResidueTerm {
    std::string point;  ///< "t = a", "S(t) = 0" or "infinity"
    int degree = 1;
    Rational residue;   ///< trace to Q for points of degree > 1
};

struct ResidueSumWitness {
    std::vector<ResidueTerm> terms;
    Rational total;
    bool holds = false;
};

ResidueSumWitness residue_sum_check(const QRatFunc& f, const QRatFunc& g);

/// res(A dB) = sum_{i+j=0} j a_i b_j; throws PrecisionError when a needed
/// coefficient is unknown.
template <class K>
K residue_pairing(const LaurentSeries<K>& A, const LaurentSeries<K>& B)
{
    K acc = zero_like(A.one());
    if (A.is_zero() || B.is_zero()) {
        if (A.is_exact() && B.is_exact())
            return acc;
    }
    long lo = A.start(), hi = -B.start();
    for (long i = lo; i <= hi; ++i) {
        long j = -i;
        K a = A.coefficient(i), b = B.coefficient(j);
        acc = K(acc + embed(acc, j) * a * b);
    }
    return acc;
}

}  // namespace numfun

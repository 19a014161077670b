#pragma once

#include <string>
#include <variant>
#include <vector>

#include "numfun/exact_log.hpp"
#include "numfun/rational_function.hpp"

namespace numfun {

// Places of the three global fields Q, F_p(t) and (a rational model of) C(t).

struct FinitePrimeQ {
    Integer p;
};
struct ArchimedeanQ {};
/// Closed point of the affine line over F_p, given by a monic irreducible P.
struct FunctionFieldPoint {
    FpPoly P;
};
struct FunctionFieldInfinity {
    std::uint64_t p;
};
/// The point t = t0 of the line over the rationals.
struct RationalPoint {
    Rational t0;
};
struct RationalInfinity {};

using Place = std::variant<FinitePrimeQ, ArchimedeanQ, FunctionFieldPoint, FunctionFieldInfinity, RationalPoint,
                           RationalInfinity>;

/// Validating constructors.
Place finite_prime(const Integer& p);
Place function_field_point(const FpPoly& P);
Place function_field_infinity(std::uint64_t p);

std::string describe(const Place& v);

class WorldMismatchError : public Error {
public:
    using Error::Error;
};

struct ValuationResult {
    long value = 0;
    long residue_degree = 1;  ///< deg P at a function-field point, 1 elsewhere
};

/// Order of f at v. At the infinite place of a function field this is the
/// order of vanishing deg(den) - deg(num).
ValuationResult val(const Rational& f, const Place& v);
ValuationResult val(const FpRatFunc& f, const Place& v);
ValuationResult val(const QRatFunc& f, const Place& v);

/// Order of a nonzero polynomial at the closed point P (generic over K).
template <class K>
long order_at(const Polynomial<K>& f, const Polynomial<K>& P)
{
    if (f.is_zero())
        throw ZeroInputError("valuation of zero is undefined");
    long n = 0;
    Polynomial<K> g = f;
    for (;;) {
        auto [q, r] = g.divmod(P);
        if (!r.is_zero())
            return n;
        g = std::move(q);
        ++n;
    }
}

/// Normalized absolute value #k(x)^{-v(f)}; |f| at the archimedean place.
/// Places of the rational-coefficient line have no finite residue field and
/// use the supplied base c > 1 instead.
Rational norm(const Rational& f, const Place& v);
Rational norm(const FpRatFunc& f, const Place& v);
Rational norm(const QRatFunc& f, const Place& v, const Rational& c = Rational(2));

struct LocalTerm {
    std::string place;
    long order = 0;
    long degree = 1;
};

struct ProductFormulaWitness {
    Rational nonarchimedean_product;  ///< prod_p |f|_p
    Rational archimedean;             ///< |f|
    std::vector<LocalTerm> terms;
    bool holds = false;  ///< nonarchimedean_product * archimedean == 1 exactly

    /// sum_p v_p(f) log p as an exact log.
    ExactLog log_witness() const { return ExactLog(Rational(1 / nonarchimedean_product)); }
};

ProductFormulaWitness product_formula_check_q(const Rational& f);

struct SumFormulaWitness {
    long total = 0;  ///< sum of order * degree over all places including infinity
    std::vector<LocalTerm> terms;
    bool holds = false;
};

SumFormulaWitness sum_formula_check_ff(const FpRatFunc& F);
SumFormulaWitness sum_formula_check_rational_coeff(const QRatFunc& F);

}  // namespace numfun

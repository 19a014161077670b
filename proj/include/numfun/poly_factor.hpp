#pragma once

#include <utility>
#include <vector>

#include "numfun/polynomial.hpp"

namespace numfun {

/// f = leading * prod factors[i].first ^ factors[i].second, factors monic
/// irreducible and sorted by (degree, coefficients).
struct FpFactorization {
    Fp leading;
    std::vector<std::pair<FpPoly, unsigned>> factors;

    FpPoly product() const;
};

/// Squarefree decomposition of a monic polynomial over F_p.
std::vector<std::pair<FpPoly, unsigned>> squarefree_mod_p(const FpPoly& f);

/// Distinct-degree splitting of a squarefree monic polynomial: (product of
/// all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree_mod_p(const FpPoly& f);

/// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree monic product
/// of irreducibles all of degree d.
std::vector<FpPoly> equal_degree_mod_p(const FpPoly& f, unsigned d);

/// Squarefree + distinct-degree + equal-degree factorization over F_p.
FpFactorization factor_poly_mod_p(const FpPoly& f);

bool is_irreducible_mod_p(const FpPoly& f);

FpPoly powmod(const FpPoly& base, const Integer& exponent, const FpPoly& modulus);

/// Coefficient-wise reduction of a p-integral rational polynomial.
class NotIntegralError : public Error {
public:
    using Error::Error;
};
FpPoly reduce_mod_p(const QPoly& f, const PrimeField& field);

// ---- integer polynomials -------------------------------------------------

/// Content c > 0 (as a rational) such that f / c has coprime integer
/// coefficients; sign chosen so that f / c has positive leading coefficient.
Rational content(const QPoly& f);
QPoly primitive_part(const QPoly& f);
bool has_integer_coefficients(const QPoly& f);
std::vector<Integer> integer_coefficients(const QPoly& f);

/// f = unit * prod factors[i].first ^ factors[i].second with every factor a
/// primitive irreducible integer polynomial of positive leading coefficient.
struct QFactorization {
    Rational unit;
    std::vector<std::pair<QPoly, unsigned>> factors;

    QPoly product() const;
};

/// Yun's squarefree decomposition over Q (monic parts).
std::vector<std::pair<QPoly, unsigned>> squarefree_over_q(const QPoly& f);

/// Factorization over Q via a mod-p factorization, Hensel lifting and
/// recombination of lifted factors.
QFactorization factor_over_q(const QPoly& f);

bool is_irreducible_over_q(const QPoly& f);

/// Deterministic total order used to sort factor lists.
bool poly_less(const FpPoly& a, const FpPoly& b);
bool poly_less(const QPoly& a, const QPoly& b);

}  // namespace numfun

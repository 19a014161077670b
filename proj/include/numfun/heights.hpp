#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numfun/exact_log.hpp"

namespace numfun {

/// (x0 : ... : xn) with coprime integer coordinates, first nonzero positive.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Integer> coords);
    /// Clears denominators first.
    static ProjectivePoint from_rationals(const std::vector<Rational>& coords);

    const std::vector<Integer>& coords() const { return x_; }
    std::size_t dimension() const { return x_.size() - 1; }
    Integer max_abs() const;

    bool operator==(const ProjectivePoint& o) const { return x_ == o.x_; }
    bool operator<(const ProjectivePoint& o) const;

private:
    std::vector<Integer> x_;
};

std::string to_string(const ProjectivePoint& P);

struct HeightValue {
    std::optional<ExactLog> exact;
    double approx = 0;
    double error_bound = 0;
};

HeightValue naive_height(const ProjectivePoint& P);

struct LocalMaximum {
    std::string place;
    Rational value;  ///< max_i |x_i|_v
};

struct MultiPlaceHeight {
    Rational product;  ///< prod_v max_i |x_i|_v
    std::vector<LocalMaximum> local;
    HeightValue height;  ///< log of the product
};

MultiPlaceHeight multi_place_height(const std::vector<Rational>& coords);

/// Canonical points of P^n(Q) with max |x_i| <= bound, sorted by (max, coords).
std::vector<ProjectivePoint> enumerate_points(std::size_t n, long bound);

struct FunctorialityWitness {
    ProjectivePoint image{{Integer(1), Integer(0)}};
    ExactLog lhs;  ///< h((x^d : y^d))
    ExactLog rhs;  ///< d h((x : y))
    bool holds = false;
};

FunctorialityWitness power_map_functoriality_check(const ProjectivePoint& P, long d);

// ---- elliptic curves ------------------------------------------------------

struct EllipticCurve {
    Rational a, b;  ///< y^2 = x^3 + a x + b
    EllipticCurve(Rational a_, Rational b_);
    Rational discriminant() const;  ///< -16 (4a^3 + 27b^2)
};

struct ECPoint {
    bool infinity = true;
    Rational x, y;

    static ECPoint at_infinity() { return {}; }
    static ECPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
    bool operator==(const ECPoint& o) const
    {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
};

std::string to_string(const ECPoint& P);

bool on_curve(const EllipticCurve& E, const ECPoint& P);
ECPoint ec_negate(const EllipticCurve& E, const ECPoint& P);
ECPoint ec_add(const EllipticCurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_double(const EllipticCurve& E, const ECPoint& P);
ECPoint ec_multiply(const EllipticCurve& E, long k, const ECPoint& P);

/// Naive height of x(P) as a point of P^1; 0 at the origin.
HeightValue x_height(const ECPoint& P);

class PrecisionBudgetError : public Error {
public:
    using Error::Error;
};

struct CanonicalHeight {
    HeightValue value;
    bool torsion = false;
    long iterations = 0;
    /// 4^-n h(x(2^n P)) for n = 0 .. iterations.
    std::vector<long double> partial;
};

/// lim 4^-n h(x(2^n P)). Stops when the tail bound is below tol; throws
/// PrecisionBudgetError when more than max_steps doublings would be needed.
CanonicalHeight canonical_height(const EllipticCurve& E, const ECPoint& P, double tol, long max_steps = 64);

}  // namespace numfun

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numfun/exact_log.hpp"
#include "numfun/polynomial.hpp"

namespace numfun {

class CommonComponentError : public Error {
public:
    using Error::Error;
};

/// The curve f = 0 on Spec Z[t]: f primitive, irreducible over Q, positive
/// leading coefficient, degree >= 1.
class HorizontalCurve {
public:
    /// Normalizes a nonzero rational multiple of an irreducible polynomial.
    explicit HorizontalCurve(const QPoly& f);
    /// The section t = a, i.e. s t - r for a = r/s in lowest terms.
    static HorizontalCurve section(const Rational& a);

    const QPoly& poly() const { return f_; }
    int degree() const { return f_.degree(); }
    bool is_section() const { return f_.degree() == 1; }
    /// r/s for the section s t - r.
    Rational section_value() const;

    bool operator==(const HorizontalCurve& o) const { return f_ == o.f_; }
    bool operator<(const HorizontalCurve& o) const;

private:
    QPoly f_;
};

/// Closed point (p, gbar) of the fiber over p.
struct SurfacePoint {
    Integer p;
    FpPoly gbar{Fp(1, 2)};

    int residue_degree() const { return gbar.degree(); }
    /// log #k(x) = deg gbar * log p
    ExactLog log_residue_size() const { return ExactLog::of_prime_power(p, gbar.degree()); }
    bool operator==(const SurfacePoint& o) const { return p == o.p && gbar == o.gbar; }
};

std::string to_string(const SurfacePoint& x);

struct CycleEntry {
    SurfacePoint point;
    long multiplicity = 0;
};

struct PrimeMultiplicity {
    Integer p;
    long multiplicity = 0;  ///< v_p(Res)
};

/// Sum over the closed points of the intersection, with its exact log.
struct IntersectionCycle {
    Integer resultant;
    std::vector<PrimeMultiplicity> per_prime;
    /// Local multiplicities; filled when one curve is a section.
    std::vector<CycleEntry> entries;
    /// Part of m_p sitting at the point at infinity of the fiber over p
    /// (two sections both with p in the denominator). Not a point of Spec Z[t].
    std::vector<PrimeMultiplicity> at_fiber_infinity;
    ExactLog total;  ///< sum_p m_p log p
    bool localized = false;
    bool exact = false;  ///< total == log|Res| and local entries account for every m_p
};

std::vector<SurfacePoint> common_points(const HorizontalCurve& C, const HorizontalCurve& D);

/// Local index at x when D is a section: v_p(Res(f, s t - r)) log p, zero when x
/// is not on both curves.
ExactLog local_index(const HorizontalCurve& C, const HorizontalCurve& D, const SurfacePoint& x);
long local_multiplicity(const HorizontalCurve& C, const HorizontalCurve& D, const SurfacePoint& x);

IntersectionCycle total_intersection(const HorizontalCurve& C, const HorizontalCurve& D);

/// v_p(a - b) for p-integral a != b.
long tangency_order(const Rational& a, const Rational& b, const Integer& p);

}  // namespace numfun

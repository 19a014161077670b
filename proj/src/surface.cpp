#include "numfun/surface.hpp"

#include <algorithm>
#include <sstream>

#include "numfun/poly_factor.hpp"

namespace numfun {

namespace {

QPoly checked_primitive(const QPoly& f)
{
    if (f.degree() < 1)
        throw Error("a horizontal curve needs a polynomial of degree >= 1");
    return primitive_part(f);
}

bool p_integral(const Rational& a, const Integer& p) { return sgn(a) == 0 || valuation(a, p) >= 0; }

}  // namespace

HorizontalCurve::HorizontalCurve(const QPoly& f) : f_(checked_primitive(f))
{
    if (!is_irreducible_over_q(f_))
        throw Error("horizontal curve " + to_string(f) + " is reducible over Q");
}

HorizontalCurve HorizontalCurve::section(const Rational& a)
{
    return HorizontalCurve(QPoly(std::vector<Rational>{Rational(-a.get_num()), Rational(a.get_den())}, Rational(1)));
}

Rational HorizontalCurve::section_value() const
{
    if (!is_section())
        throw Error(to_string(f_) + " is not a section");
    return Rational(-f_.coeff(0) / f_.coeff(1));
}

bool HorizontalCurve::operator<(const HorizontalCurve& o) const
{
    if (f_.degree() != o.f_.degree())
        return f_.degree() < o.f_.degree();
    for (int i = f_.degree(); i >= 0; --i)
        if (f_.coeff(i) != o.f_.coeff(i))
            return f_.coeff(i) < o.f_.coeff(i);
    return false;
}

std::string to_string(const SurfacePoint& x)
{
    return "(" + x.p.get_str() + ", " + to_string(x.gbar) + ")";
}

namespace {

Integer integer_resultant(const HorizontalCurve& C, const HorizontalCurve& D)
{
    Rational r = resultant(C.poly(), D.poly());
    return Integer(r.get_num());
}

std::vector<Integer> primes_of(const Integer& n)
{
    std::vector<Integer> ps;
    for (const auto& [p, e] : factor_integer(n).factors)
        ps.push_back(p);
    return ps;
}

void require_distinct(const HorizontalCurve& C, const HorizontalCurve& D)
{
    if (C == D)
        throw CommonComponentError("curves " + to_string(C.poly()) + " coincide");
}

std::uint64_t small_modulus(const Integer& p)
{
    if (!mpz_fits_ulong_p(p.get_mpz_t()) || p > (Integer(1) << 62))
        throw Error("prime too large for fiber arithmetic");
    return p.get_ui();
}

std::vector<SurfacePoint> points_over(const HorizontalCurve& C, const HorizontalCurve& D, const Integer& p)
{
    PrimeField field(p);
    FpPoly f = reduce_mod_p(C.poly(), field), g = reduce_mod_p(D.poly(), field);
    FpPoly h = poly_gcd(f, g);
    std::vector<SurfacePoint> out;
    if (h.degree() < 1)
        return out;
    for (const auto& [P, e] : factor_poly_mod_p(h).factors)
        out.push_back({p, P});
    return out;
}

}  // namespace

std::vector<SurfacePoint> common_points(const HorizontalCurve& C, const HorizontalCurve& D)
{
    require_distinct(C, D);
    std::vector<SurfacePoint> out;
    for (const auto& p : primes_of(integer_resultant(C, D))) {
        small_modulus(p);
        auto pts = points_over(C, D, p);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

long local_multiplicity(const HorizontalCurve& C, const HorizontalCurve& D, const SurfacePoint& x)
{
    if (!D.is_section()) {
        if (C.is_section())
            return local_multiplicity(D, C, x);
        throw Error("local indices are supported only when one curve is a section");
    }
    require_distinct(C, D);
    Rational a = D.section_value();
    if (!p_integral(a, x.p))
        return 0;  // the section misses the affine fiber over p
    auto pts = points_over(C, D, x.p);
    if (std::find(pts.begin(), pts.end(), x) == pts.end())
        return 0;
    return valuation(integer_resultant(C, D), x.p);
}

ExactLog local_index(const HorizontalCurve& C, const HorizontalCurve& D, const SurfacePoint& x)
{
    return ExactLog::of_prime_power(x.p, local_multiplicity(C, D, x));
}

IntersectionCycle total_intersection(const HorizontalCurve& C, const HorizontalCurve& D)
{
    require_distinct(C, D);
    IntersectionCycle cyc;
    cyc.resultant = integer_resultant(C, D);
    const bool with_section = C.is_section() || D.is_section();
    cyc.localized = with_section;
    bool accounted = true;
    for (const auto& p : primes_of(cyc.resultant)) {
        long m = valuation(cyc.resultant, p);
        cyc.per_prime.push_back({p, m});
        cyc.total += ExactLog::of_prime_power(p, m);
        if (!with_section)
            continue;
        long local = 0;
        for (const auto& x : points_over(C, D, p)) {
            long mult = local_multiplicity(C, D, x);
            if (mult > 0) {
                cyc.entries.push_back({x, mult});
                local += mult;
            }
        }
        if (local < m) {
            // Only possible when both are sections with p dividing both denominators.
            if (C.is_section() && D.is_section() && !p_integral(C.section_value(), p) &&
                !p_integral(D.section_value(), p))
                cyc.at_fiber_infinity.push_back({p, m - local});
            else
                accounted = false;
        }
    }
    cyc.exact = (cyc.total.arg() == Rational(abs(cyc.resultant))) && accounted;
    return cyc;
}

long tangency_order(const Rational& a, const Rational& b, const Integer& p)
{
    if (!is_prime(p))
        throw NotPrimeError(to_string(p) + " is not prime");
    if (!p_integral(a, p) || !p_integral(b, p))
        throw NotIntegralError("sections must be " + to_string(p) + "-integral");
    if (a == b)
        throw CommonComponentError("identical sections have no finite tangency order");
    return valuation(Rational(a - b), p);
}

}  // namespace numfun

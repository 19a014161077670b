#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numfun/exact_log.hpp"
#include "numfun/quadrature.hpp"
#include "numfun/rational_function.hpp"
#include "numfun/surface.hpp"

namespace numfun {

class DiagonalError : public Error {
public:
    using Error::Error;
};

class SupportOverlapError : public Error {
public:
    using Error::Error;
};

/// Point of the Riemann sphere: a complex number or infinity.
struct SpherePoint {
    bool infinity = false;
    std::complex<double> z;

    static SpherePoint at(std::complex<double> w) { return {false, w}; }
    static SpherePoint at_infinity() { return {true, {}}; }
};

std::string to_string(const SpherePoint& P);

/// Additive constant of log G. With the Fubini-Study measure of mass 1,
/// int log|z - w| dmu(z) = 1/2 log(1 + |w|^2), so int log G(P, .) dmu = 0
/// forces c = 1/2 int log(1 + |z|^2) dmu = 1/2.
constexpr double kGreenConstant = 0.5;

/// c recomputed by quadrature from int log G(0, .) dmu = 0.
QuadResult green_constant_by_quadrature(const QuadConfig& cfg = {});

/// log G(P, Q) = log|z - w| - 1/2 log(1+|z|^2) - 1/2 log(1+|w|^2) + c and
/// log G(z, inf) = -1/2 log(1+|z|^2) + c.
double log_green(const SpherePoint& P, const SpherePoint& Q);

/// Fubini-Study density w.r.t. dx dy: 1 / (pi (1 + |z|^2)^2).
double fs_density(std::complex<double> z);

/// Horizontal curve on P^1 over Z: f(t) = 0 or the section at infinity (1:0).
class ProjectiveCurve {
public:
    explicit ProjectiveCurve(HorizontalCurve c) : affine_(std::move(c)) {}
    static ProjectiveCurve infinity() { return ProjectiveCurve(); }
    static ProjectiveCurve section(const Rational& a) { return ProjectiveCurve(HorizontalCurve::section(a)); }

    bool is_infinity() const { return !affine_; }
    const HorizontalCurve& affine() const { return *affine_; }
    /// Degree over the base; 1 for the section at infinity.
    int degree() const { return affine_ ? affine_->degree() : 1; }
    bool is_section() const { return degree() == 1; }

    bool operator==(const ProjectiveCurve& o) const;
    bool operator<(const ProjectiveCurve& o) const;

private:
    ProjectiveCurve() = default;
    std::optional<HorizontalCurve> affine_;
};

std::string to_string(const ProjectiveCurve& C);

/// sum n_C C + sum_p m_p X_p + a_inf X_inf.
struct ArakelovDivisor {
    std::map<ProjectiveCurve, long> horizontal;
    std::map<Integer, long> vertical;
    double a_inf = 0;
    double a_inf_error = 0;  ///< quadrature error carried by a_inf

    static ArakelovDivisor of(const ProjectiveCurve& C, long n = 1);
    static ArakelovDivisor fiber_at_infinity(double a);

    /// Total degree of the horizontal part over the base.
    long degree() const;
    ArakelovDivisor operator+(const ArakelovDivisor& o) const;
    ArakelovDivisor operator-() const;
    ArakelovDivisor operator-(const ArakelovDivisor& o) const { return *this + (-o); }
};

std::string to_string(const ArakelovDivisor& D);

struct ArchPairing {
    double value = 0;
    double error = 0;  ///< from root inclusion radii and rounding
};

/// sum over complex points P of C and Q of D of -log G(P, Q).
ArchPairing arch_pairing(const ProjectiveCurve& C, const ProjectiveCurve& D);

struct PairingValue {
    ExactLog finite_part;
    double archimedean = 0;
    double degree_terms = 0;
    double total = 0;
    double error_bound = 0;
};

PairingValue arakelov_pairing(const ArakelovDivisor& C, const ArakelovDivisor& D);

/// (F) = (F)_X + sum_p v_p(kappa) X_p + a_inf X_inf with a_inf = -int log|F| dmu,
/// where F = kappa prod f_i^e_i with f_i primitive.
ArakelovDivisor divisor_of_function(const QRatFunc& F, const QuadConfig& cfg = {});

/// Closed form of -int log|F| dmu through complex roots, for cross-checks.
double function_fiber_coefficient_closed_form(const QRatFunc& F);

/// Divisor of omega = h dt with the residual metric ||dt|| = (1+|z|^2) e^{-c};
/// for h = 1 this is -2 (inf) + (c - int log(1+|z|^2) dmu) X_inf.
ArakelovDivisor canonical_divisor(const QRatFunc& h, const QuadConfig& cfg = {});
ArakelovDivisor canonical_divisor(const QuadConfig& cfg = {});

struct InvarianceWitness {
    PairingValue before, after;
    double residual = 0;
    double bound = 0;
    bool holds = false;
};

/// pair(C, D) against pair(C, D + (F)).
InvarianceWitness linear_equiv_invariance_check(const ArakelovDivisor& C, const ArakelovDivisor& D,
                                                const QRatFunc& F, double tol = 1e-6, const QuadConfig& cfg = {});

/// The moving function for a section: (t - m)/(s t - r), or t - m at infinity.
QRatFunc moving_function(const ProjectiveCurve& C, long m);

/// C.C computed as pair(C, C + (F)) with F = moving_function(C, m).
PairingValue self_intersection(const ArakelovDivisor& C, long m = 7, const QuadConfig& cfg = {});

struct AdjunctionWitness {
    PairingValue with_canonical, self;
    double residual = 0;
    bool holds = false;
};

AdjunctionWitness adjunction_check(const ProjectiveCurve& C, double tol = 1e-5, const QuadConfig& cfg = {});

}  // namespace numfun

#include "numfun/arakelov.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>

#include "numfun/poly_factor.hpp"
#include "numfun/roots.hpp"

namespace numfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log1p_norm(std::complex<double> z) { return std::log1p(std::norm(z)); }

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::complex<double>> coeffs_double(const QPoly& f)
{
    std::vector<std::complex<double>> c;
    for (int i = 0; i <= f.degree(); ++i)
        c.emplace_back(f.coeff(i).get_d(), 0.0);
    return c;
}

double log_abs_eval(const std::vector<std::complex<double>>& c, std::complex<double> z)
{
    std::complex<double> r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * z + *it;
    return std::log(std::abs(r));
}

// Perturbation bound for -log G(z, w) when z, w move by rz, rw: the
// log|z-w| term moves by at most (rz+rw)/(|z-w|-rz-rw) and each
// 1/2 log(1+|z|^2) by at most r/2.
double green_error(std::complex<double> z, double rz, std::complex<double> w, double rw)
{
    double gap = std::abs(z - w) - rz - rw;
    if (gap <= 0)
        throw DiagonalError("root inclusion disks meet; points cannot be separated");
    return (rz + rw) / gap + 0.5 * (rz + rw);
}

}  // namespace

std::string to_string(const SpherePoint& P)
{
    if (P.infinity)
        return "inf";
    return fmt(P.z.real()) + (P.z.imag() < 0 ? " - " : " + ") + fmt(std::fabs(P.z.imag())) + "i";
}

double log_green(const SpherePoint& P, const SpherePoint& Q)
{
    if (P.infinity && Q.infinity)
        throw DiagonalError("log G is singular on the diagonal (inf, inf)");
    if (P.infinity)
        return -0.5 * log1p_norm(Q.z) + kGreenConstant;
    if (Q.infinity)
        return -0.5 * log1p_norm(P.z) + kGreenConstant;
    if (P.z == Q.z)
        throw DiagonalError("log G is singular on the diagonal at " + to_string(P));
    return std::log(std::abs(P.z - Q.z)) - 0.5 * log1p_norm(P.z) - 0.5 * log1p_norm(Q.z) + kGreenConstant;
}

double fs_density(std::complex<double> z)
{
    double d = 1 + std::norm(z);
    return 1 / (kPi * d * d);
}

QuadResult green_constant_by_quadrature(const QuadConfig& cfg)
{
    // 0 = int log G(0, z) dmu = int (log|z| - 1/2 log(1+|z|^2)) dmu + c
    return integrate_sphere(
        [](std::complex<double> z) { return -(std::log(std::abs(z)) - 0.5 * log1p_norm(z)); }, {0.0}, cfg);
}

// ---- curves and divisors ---------------------------------------------------

bool ProjectiveCurve::operator==(const ProjectiveCurve& o) const
{
    if (is_infinity() || o.is_infinity())
        return is_infinity() == o.is_infinity();
    return *affine_ == *o.affine_;
}

bool ProjectiveCurve::operator<(const ProjectiveCurve& o) const
{
    if (is_infinity() || o.is_infinity())
        return is_infinity() && !o.is_infinity();
    return *affine_ < *o.affine_;
}

std::string to_string(const ProjectiveCurve& C)
{
    return C.is_infinity() ? std::string("inf") : to_string(C.affine().poly());
}

ArakelovDivisor ArakelovDivisor::of(const ProjectiveCurve& C, long n)
{
    ArakelovDivisor D;
    if (n != 0)
        D.horizontal.emplace(C, n);
    return D;
}

ArakelovDivisor ArakelovDivisor::fiber_at_infinity(double a)
{
    ArakelovDivisor D;
    D.a_inf = a;
    return D;
}

long ArakelovDivisor::degree() const
{
    long d = 0;
    for (const auto& [C, n] : horizontal)
        d += n * C.degree();
    return d;
}

ArakelovDivisor ArakelovDivisor::operator+(const ArakelovDivisor& o) const
{
    ArakelovDivisor r = *this;
    for (const auto& [C, n] : o.horizontal)
        if ((r.horizontal[C] += n) == 0)
            r.horizontal.erase(C);
    for (const auto& [p, n] : o.vertical)
        if ((r.vertical[p] += n) == 0)
            r.vertical.erase(p);
    r.a_inf += o.a_inf;
    r.a_inf_error += o.a_inf_error;
    return r;
}

ArakelovDivisor ArakelovDivisor::operator-() const
{
    ArakelovDivisor r = *this;
    for (auto& [C, n] : r.horizontal)
        n = -n;
    for (auto& [p, n] : r.vertical)
        n = -n;
    r.a_inf = -a_inf;
    return r;
}

std::string to_string(const ArakelovDivisor& D)
{
    std::string s;
    auto term = [&](long n, const std::string& what) {
        if (!s.empty())
            s += n < 0 ? " - " : " + ";
        else if (n < 0)
            s += "-";
        long a = n < 0 ? -n : n;
        s += (a == 1 ? "" : std::to_string(a) + "*") + what;
    };
    for (const auto& [C, n] : D.horizontal)
        term(n, "(" + to_string(C) + ")");
    for (const auto& [p, n] : D.vertical)
        term(n, "X_" + p.get_str());
    if (D.a_inf != 0 || s.empty())
        s += (s.empty() ? "" : " + ") + fmt(D.a_inf) + "*X_inf";
    return s;
}

// ---- pairing ---------------------------------------------------------------

namespace {

struct CurveRoots {
    std::vector<SpherePoint> points;
    double radius = 0;
};

CurveRoots roots_of(const ProjectiveCurve& C)
{
    CurveRoots r;
    if (C.is_infinity()) {
        r.points.push_back(SpherePoint::at_infinity());
        return r;
    }
    auto rs = complex_roots(C.affine().poly());
    for (auto z : rs.roots)
        r.points.push_back(SpherePoint::at(z));
    r.radius = rs.radius;
    return r;
}

// C ._X D for distinct horizontal curves: log |Res| of the binary forms.
ExactLog finite_pairing(const ProjectiveCurve& C, const ProjectiveCurve& D)
{
    if (C == D)
        throw SupportOverlapError("curves " + to_string(C) + " coincide; move one by a principal divisor first");
    if (C.is_infinity() || D.is_infinity()) {
        const auto& f = (C.is_infinity() ? D : C).affine().poly();
        return ExactLog(abs(f.leading()));
    }
    Rational res = resultant(C.affine().poly(), D.affine().poly());
    if (sgn(res) == 0)
        throw SupportOverlapError("curves share a component");
    return ExactLog(abs(res));
}

}  // namespace

ArchPairing arch_pairing(const ProjectiveCurve& C, const ProjectiveCurve& D)
{
    if (C == D)
        throw DiagonalError("curves " + to_string(C) + " share all complex points");
    auto rc = roots_of(C), rd = roots_of(D);
    ArchPairing out;
    double magnitude = 0;
    for (const auto& P : rc.points)
        for (const auto& Q : rd.points) {
            double g = log_green(P, Q);
            out.value -= g;
            magnitude += std::fabs(g);
            if (P.infinity)
                out.error += 0.5 * rd.radius;
            else if (Q.infinity)
                out.error += 0.5 * rc.radius;
            else
                out.error += green_error(P.z, rc.radius, Q.z, rd.radius);
        }
    out.error += 16 * DBL_EPSILON * (magnitude + 1);
    return out;
}

PairingValue arakelov_pairing(const ArakelovDivisor& C, const ArakelovDivisor& D)
{
    for (const auto& [curve, n] : C.horizontal)
        if (D.horizontal.count(curve))
            throw SupportOverlapError("both divisors contain (" + to_string(curve) +
                                      "); move one by a principal divisor first");
    PairingValue v;
    for (const auto& [c, n] : C.horizontal)
        for (const auto& [d, m] : D.horizontal) {
            v.finite_part += finite_pairing(c, d).times(n * m);
            auto a = arch_pairing(c, d);
            v.archimedean += static_cast<double>(n * m) * a.value;
            v.error_bound += static_cast<double>(std::labs(n * m)) * a.error;
        }
    // X_p . D = deg(D) log p; fibers do not meet each other.
    for (const auto& [p, n] : C.vertical)
        v.finite_part += ExactLog::of_prime_power(p, n * D.degree());
    for (const auto& [p, m] : D.vertical)
        v.finite_part += ExactLog::of_prime_power(p, m * C.degree());
    const double dc = static_cast<double>(C.degree()), dd = static_cast<double>(D.degree());
    v.degree_terms = C.a_inf * dd + D.a_inf * dc;
    v.error_bound += C.a_inf_error * std::fabs(dd) + D.a_inf_error * std::fabs(dc);
    double fin = v.finite_part.value();
    v.total = fin + v.archimedean + v.degree_terms;
    v.error_bound += 8 * DBL_EPSILON * (std::fabs(fin) + std::fabs(v.archimedean) + std::fabs(v.degree_terms));
    return v;
}

// ---- principal and canonical divisors -------------------------------------

namespace {

struct FunctionFactors {
    Rational kappa;
    std::vector<std::pair<QPoly, long>> factors;  // primitive, signed exponents
};

FunctionFactors factor_function(const QRatFunc& F)
{
    if (F.is_zero())
        throw ZeroInputError("divisor of the zero function");
    auto fn = factor_over_q(F.num()), fd = factor_over_q(F.den());
    FunctionFactors out{Rational(fn.unit / fd.unit), {}};
    for (const auto& [f, e] : fn.factors)
        out.factors.emplace_back(f, static_cast<long>(e));
    for (const auto& [f, e] : fd.factors)
        out.factors.emplace_back(f, -static_cast<long>(e));
    return out;
}

}  // namespace

ArakelovDivisor divisor_of_function(const QRatFunc& F, const QuadConfig& cfg)
{
    auto ff = factor_function(F);
    ArakelovDivisor D;
    std::vector<std::complex<double>> singular;
    for (const auto& [f, e] : ff.factors) {
        D.horizontal[ProjectiveCurve(HorizontalCurve(f))] += e;
        for (auto z : complex_roots(f).roots)
            singular.push_back(z);
    }
    long at_inf = F.den().degree() - F.num().degree();
    if (at_inf != 0)
        D.horizontal[ProjectiveCurve::infinity()] += at_inf;
    for (const Integer& n : {Integer(ff.kappa.get_num()), Integer(ff.kappa.get_den())}) {
        long sign = n == ff.kappa.get_num() ? 1 : -1;
        for (const auto& [p, e] : factor_integer(n).factors)
            D.vertical[p] += sign * static_cast<long>(e);
    }
    if (F.num().degree() == 0 && F.den().degree() == 0) {
        D.a_inf = -log_abs(ff.kappa);
        return D;
    }
    // log|F| = log|kappa| + sum e_i log|f_i|; the factored form avoids the
    // cancellation of an expanded (t - a)^k near a
    std::vector<std::pair<std::vector<std::complex<double>>, double>> parts;
    for (const auto& [f, e] : ff.factors)
        parts.emplace_back(coeffs_double(f), static_cast<double>(e));
    const double log_kappa = log_abs(ff.kappa);
    auto q = integrate_sphere(
        [&](std::complex<double> z) {
            double s = log_kappa;
            for (const auto& [c, e] : parts)
                s += e * log_abs_eval(c, z);
            return -s;
        },
        singular, cfg);
    D.a_inf = q.value;
    D.a_inf_error = q.error;
    return D;
}

double function_fiber_coefficient_closed_form(const QRatFunc& F)
{
    // int log|f| dmu = log|lc f| + 1/2 sum_roots log(1+|alpha|^2)
    auto ff = factor_function(F);
    double a = -log_abs(ff.kappa);
    for (const auto& [f, e] : ff.factors) {
        double s = log_abs(f.leading());
        for (auto z : complex_roots(f).roots)
            s += 0.5 * log1p_norm(z);
        a -= static_cast<double>(e) * s;
    }
    return a;
}

ArakelovDivisor canonical_divisor(const QRatFunc& h, const QuadConfig& cfg)
{
    ArakelovDivisor K = divisor_of_function(h, cfg) + ArakelovDivisor::of(ProjectiveCurve::infinity(), -2);
    // -int log ||dt|| dmu with log ||dt|| = log(1+|z|^2) - c
    auto q = integrate_sphere([](std::complex<double> z) { return kGreenConstant - log1p_norm(z); }, {}, cfg);
    K.a_inf += q.value;
    K.a_inf_error += q.error;
    return K;
}

ArakelovDivisor canonical_divisor(const QuadConfig& cfg)
{
    return canonical_divisor(QRatFunc(QPoly::constant(Rational(1))), cfg);
}

InvarianceWitness linear_equiv_invariance_check(const ArakelovDivisor& C, const ArakelovDivisor& D,
                                                const QRatFunc& F, double tol, const QuadConfig& cfg)
{
    InvarianceWitness w;
    w.before = arakelov_pairing(C, D);
    w.after = arakelov_pairing(C, D + divisor_of_function(F, cfg));
    w.residual = std::fabs(w.before.total - w.after.total);
    w.bound = w.before.error_bound + w.after.error_bound;
    w.holds = w.residual < tol;
    return w;
}

QRatFunc moving_function(const ProjectiveCurve& C, long m)
{
    if (!C.is_section())
        throw Error("moving function needs a section, got " + to_string(C));
    QPoly t_minus_m({Rational(-m), Rational(1)}, Rational(1));
    if (C.is_infinity())
        return QRatFunc(t_minus_m);
    Rational a = C.affine().section_value();
    if (a == m)
        throw Error("moving parameter " + std::to_string(m) + " lies on the section");
    return QRatFunc(t_minus_m, C.affine().poly());
}

PairingValue self_intersection(const ArakelovDivisor& C, long m, const QuadConfig& cfg)
{
    if (C.horizontal.size() != 1 || C.horizontal.begin()->second != 1 || !C.horizontal.begin()->first.is_section())
        throw Error("self-intersection needs a single section with coefficient 1");
    const auto& curve = C.horizontal.begin()->first;
    return arakelov_pairing(C, C + divisor_of_function(moving_function(curve, m), cfg));
}

AdjunctionWitness adjunction_check(const ProjectiveCurve& C, double tol, const QuadConfig& cfg)
{
    if (!C.is_section())
        throw Error("adjunction applies to sections; " + to_string(C) + " has degree " +
                    std::to_string(C.degree()));
    auto Ct = ArakelovDivisor::of(C);
    long m = 7;
    if (!C.is_infinity() && C.affine().section_value() == m)
        m = 11;
    // omega = dt has support at infinity; use dt / (t-1)^2 when C is that section
    QRatFunc h(QPoly::constant(Rational(1)));
    if (C.is_infinity()) {
        QPoly t1({Rational(-1), Rational(1)}, Rational(1));
        h = QRatFunc(QPoly::constant(Rational(1)), t1 * t1);
    }
    AdjunctionWitness w;
    w.with_canonical = arakelov_pairing(Ct, canonical_divisor(h, cfg));
    w.self = self_intersection(Ct, m, cfg);
    w.residual = std::fabs(w.with_canonical.total + w.self.total);
    w.holds = w.residual < tol;
    return w;
}

}  // namespace numfun

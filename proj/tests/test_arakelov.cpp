#include "doctest.h"

#include <cmath>

#include "generators.hpp"
#include "numfun/arakelov.hpp"
#include "numfun/heights.hpp"
#include "numfun/parse.hpp"
#include "numfun/roots.hpp"

using namespace numfun;
using namespace numfun::testing;

namespace {

constexpr double c = kGreenConstant;

SpherePoint at(double x, double y = 0) { return SpherePoint::at({x, y}); }
ProjectiveCurve sec(long r, long s = 1) { return ProjectiveCurve::section(make_rational(r, s)); }
ArakelovDivisor div(const ProjectiveCurve& C, long n = 1) { return ArakelovDivisor::of(C, n); }
QRatFunc F(const char* s) { return parse_rational_function(s); }
ProjectiveCurve curve(const char* s) { return ProjectiveCurve(HorizontalCurve(parse_polynomial(s))); }

}  // namespace

TEST_CASE("complex roots with inclusion radii")
{
    auto r = complex_roots(parse_polynomial("t^2+1"));
    REQUIRE(r.roots.size() == 2);
    CHECK(std::abs(r.roots[0] - std::complex<double>(0, -1)) <= r.radius + 1e-15);
    CHECK(std::abs(r.roots[1] - std::complex<double>(0, 1)) <= r.radius + 1e-15);
    CHECK(r.radius < 1e-14);
    auto c3 = complex_roots(parse_polynomial("t^3-2"));
    for (auto z : c3.roots)
        CHECK(std::abs(z * z * z - 2.0) < 1e-13);
    CHECK_THROWS_AS(complex_roots(parse_polynomial("t^13+1")), RootFindingError);
    CHECK_THROWS_AS(complex_roots(parse_polynomial("5")), RootFindingError);
    // a double root cannot be isolated
    CHECK_THROWS_AS(complex_roots(parse_polynomial("t^2-2*t+1")), RootFindingError);
    std::mt19937_64 rng(401);
    for (int i = 0; i < 100; ++i) {
        QPoly f = random_q_poly(rng, 8, 9);
        if (f.degree() < 1 || poly_gcd(f, f.derivative()).degree() > 0)
            continue;
        auto rs = complex_roots(f);
        CHECK(rs.roots.size() == static_cast<std::size_t>(f.degree()));
        // Vieta: sum of roots
        std::complex<double> s = 0;
        for (auto z : rs.roots)
            s += z;
        double expect = -Rational(f.coeff(f.degree() - 1) / f.leading()).get_d();
        CHECK(std::abs(s - expect) < 1e-9 * (1 + std::abs(expect)));
    }
}

TEST_CASE("green function examples")
{
    CHECK(log_green(at(0), at(1)) == doctest::Approx(-0.5 * std::log(2.0) + c).epsilon(1e-15));
    CHECK(log_green(at(0), SpherePoint::at_infinity()) == doctest::Approx(c));
    CHECK_THROWS_AS(log_green(at(2, 1), at(2, 1)), DiagonalError);
    CHECK_THROWS_AS(log_green(SpherePoint::at_infinity(), SpherePoint::at_infinity()), DiagonalError);
    // chart at infinity: G(z, inf) is the limit of G(z, w) - log|w| as w -> inf
    double far = 1e7;
    CHECK(log_green(at(0.3, -2), at(far)) == doctest::Approx(log_green(at(0.3, -2), SpherePoint::at_infinity())).epsilon(1e-6));
    // near-diagonal: log G - log|z - w| stays bounded
    for (double h : {1e-2, 1e-5, 1e-9}) {
        double d = log_green(at(1, 1), at(1 + h, 1)) - std::log(h);
        CHECK(std::fabs(d - (-std::log(3.0) + c)) < 1e-1);
    }
}

TEST_CASE("green symmetry")
{
    std::mt19937_64 rng(403);
    std::normal_distribution<double> g(0, 3);
    for (int i = 0; i < 1000; ++i) {
        auto P = at(g(rng), g(rng)), Q = at(g(rng), g(rng));
        CHECK(std::fabs(log_green(P, Q) - log_green(Q, P)) < 1e-12);
        CHECK(std::fabs(log_green(P, SpherePoint::at_infinity()) - log_green(SpherePoint::at_infinity(), P)) < 1e-12);
    }
}

TEST_CASE("sphere quadrature and the green constant")
{
    auto mass = integrate_sphere([](std::complex<double>) { return 1.0; }, {});
    CHECK(std::fabs(mass.value - 1) < 1e-13);
    auto L = integrate_sphere([](std::complex<double> z) { return std::log1p(std::norm(z)); }, {});
    CHECK(std::fabs(L.value - 1) < 1e-11);
    auto cq = green_constant_by_quadrature();
    CHECK(std::fabs(cq.value - kGreenConstant) < 1e-11);
    CHECK(cq.error < 1e-10);
    // int log|z - w| dmu(z) = 1/2 log(1 + |w|^2)
    for (auto w : {std::complex<double>(2, 0), std::complex<double>(-0.5, 3), std::complex<double>(10, -10)}) {
        auto q = integrate_sphere([w](std::complex<double> z) { return std::log(std::abs(z - w)); }, {w});
        CHECK(std::fabs(q.value - 0.5 * std::log1p(std::norm(w))) < 1e-10);
    }
}

TEST_CASE("green normalization")
{
    std::mt19937_64 rng(409);
    std::normal_distribution<double> g(0, 2);
    std::vector<SpherePoint> pts{SpherePoint::at_infinity()};
    for (int i = 0; i < 4; ++i)
        pts.push_back(at(g(rng), g(rng)));
    for (const auto& P : pts) {
        std::vector<std::complex<double>> sing;
        if (!P.infinity)
            sing.push_back(P.z);
        auto q = integrate_sphere(
            [&](std::complex<double> z) { return log_green(P, SpherePoint::at(z)); }, sing);
        CHECK(std::fabs(q.value) < 1e-7);
    }
}

TEST_CASE("serial and parallel quadrature agree")
{
    std::vector<std::complex<double>> sing{{2, 0}, {0, 1}, {0, -1}};
    SphereIntegrand f = [](std::complex<double> z) {
        return std::log(std::abs((z - 2.0) * (z * z + 1.0)));
    };
    for (int res : {6, 12, 20}) {
        auto cfg = quad_config_from_resolution(res);
        CHECK(integrate_sphere_once(f, sing, cfg) == integrate_sphere_once_serial(f, sing, cfg));
    }
}

TEST_CASE("arch pairing examples")
{
    CHECK(arch_pairing(sec(0), sec(1)).value == doctest::Approx(-log_green(at(0), at(1))).epsilon(1e-14));
    auto a = arch_pairing(sec(0), curve("t^2+1"));
    CHECK(std::fabs(a.value + log_green(at(0), at(0, 1)) + log_green(at(0), at(0, -1))) < 1e-14);
    CHECK(a.error < 1e-12);
    CHECK(arch_pairing(sec(0), ProjectiveCurve::infinity()).value == doctest::Approx(-c));
    CHECK(arch_pairing(ProjectiveCurve::infinity(), sec(3)).value ==
          doctest::Approx(-log_green(SpherePoint::at_infinity(), at(3))));
    CHECK_THROWS_AS(arch_pairing(sec(2), sec(2)), DiagonalError);
    CHECK_THROWS_AS(arch_pairing(ProjectiveCurve::infinity(), ProjectiveCurve::infinity()), DiagonalError);
}

TEST_CASE("arakelov pairing examples")
{
    auto p01 = arakelov_pairing(div(sec(0)), div(sec(1)));
    CHECK(p01.finite_part.is_zero());
    CHECK(p01.total == doctest::Approx(-log_green(at(0), at(1))).epsilon(1e-14));
    auto p02 = arakelov_pairing(div(sec(0)), div(sec(2)));
    CHECK(p02.finite_part.to_string() == "log(2)");
    CHECK(p02.total == doctest::Approx(std::log(2.0) - log_green(at(0), at(2))).epsilon(1e-14));
    // fiber-only
    auto pf = arakelov_pairing(ArakelovDivisor::fiber_at_infinity(2.5), div(sec(0)));
    CHECK(pf.total == 2.5);
    CHECK(pf.finite_part.is_zero());
    // degree terms use the total degree: a X_inf . (t^2+1) = 2a
    CHECK(arakelov_pairing(ArakelovDivisor::fiber_at_infinity(1.5), div(curve("t^2+1"))).total == 3.0);
    // X_p . D = deg(D) log p
    ArakelovDivisor X3;
    X3.vertical[Integer(3)] = 1;
    CHECK(arakelov_pairing(X3, div(curve("t^2+2"))).finite_part.to_string() == "2 * log(3)");
    // section at infinity against (s t - r): log s
    CHECK(arakelov_pairing(div(ProjectiveCurve::infinity()), div(sec(2, 5))).finite_part.to_string() == "log(5)");
    CHECK_THROWS_AS(arakelov_pairing(div(sec(1)) + div(sec(2)), div(sec(2))), SupportOverlapError);
}

TEST_CASE("pairing is bilinear and symmetric")
{
    std::mt19937_64 rng(419);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int i = 0; i < 60; ++i) {
        auto C1 = sec(num(rng), den(rng)), C2 = sec(num(rng), den(rng)), D = curve(i % 2 ? "t^2+t+3" : "2*t^3-7");
        if (C1 == C2)
            continue;
        ArakelovDivisor A = div(C1, 2), B = div(C2, -3);
        A.a_inf = 0.25;
        B.vertical[Integer(5)] = 1;
        ArakelovDivisor Dt = div(D) + ArakelovDivisor::fiber_at_infinity(-0.75);
        auto sum = arakelov_pairing(A + B, Dt);
        auto parts = arakelov_pairing(A, Dt).total + arakelov_pairing(B, Dt).total;
        CHECK(std::fabs(sum.total - parts) <= sum.error_bound + 1e-12);
        CHECK(std::fabs(sum.total - arakelov_pairing(Dt, A + B).total) <= sum.error_bound + 1e-12);
        CHECK(sum.error_bound < 1e-9);
    }
}

TEST_CASE("divisor of a function")
{
    auto Dt = divisor_of_function(F("t"));
    CHECK(Dt.horizontal.at(sec(0)) == 1);
    CHECK(Dt.horizontal.at(ProjectiveCurve::infinity()) == -1);
    CHECK(std::fabs(Dt.a_inf) < 1e-12);

    auto Dq = divisor_of_function(F("-12/5"));
    CHECK(Dq.horizontal.empty());
    CHECK(Dq.a_inf == doctest::Approx(-std::log(12.0 / 5)).epsilon(1e-15));
    CHECK(Dq.vertical.at(Integer(2)) == 2);
    CHECK(Dq.vertical.at(Integer(5)) == -1);

    auto D2 = divisor_of_function(F("t-2"));
    CHECK(D2.horizontal.size() == 2);
    CHECK(std::fabs(D2.a_inf - (-0.5 * std::log(5.0))) < 1e-10);
    auto D2f = divisor_of_function(F("t-2"), QuadConfig{}.refined());
    CHECK(std::fabs(D2.a_inf - D2f.a_inf) < 1e-8);
    CHECK(D2.a_inf_error < 1e-8);

    // irreducible factors keep their degree; infinity takes deg den - deg num
    auto D3 = divisor_of_function(F("(2*t^2+2)/(t^3-3)"));
    CHECK(D3.horizontal.at(curve("t^2+1")) == 1);
    CHECK(D3.horizontal.at(curve("t^3-3")) == -1);
    CHECK(D3.horizontal.at(ProjectiveCurve::infinity()) == 1);
    CHECK(D3.vertical.at(Integer(2)) == 1);
    CHECK(D3.degree() == 0);
    CHECK_THROWS_AS(divisor_of_function(F("0")), ZeroInputError);
}

TEST_CASE("fiber coefficient: quadrature against closed form")
{
    std::mt19937_64 rng(421);
    int checked = 0;
    while (checked < 30) {
        QRatFunc f = random_q_ratfunc(rng, 4, 6);
        if (f.is_zero())
            continue;
        auto D = divisor_of_function(f);
        CHECK(std::fabs(D.a_inf - function_fiber_coefficient_closed_form(f)) < 1e-9);
        CHECK(D.degree() == 0);
        ++checked;
    }
}

TEST_CASE("invariance under linear equivalence")
{
    auto w = linear_equiv_invariance_check(div(sec(0)), div(sec(1)), F("(t-2)/(t-3)"));
    CHECK(w.holds);
    CHECK(w.residual < 1e-9);
    auto one = linear_equiv_invariance_check(div(sec(0)), div(sec(1)), F("1"));
    CHECK(one.residual == 0);
    for (const char* q : {"7", "-12/5", "1/1024", "3^20"}) {
        auto k = linear_equiv_invariance_check(div(curve("t^2+1")), div(sec(3)), F(q));
        CHECK(k.residual < 1e-12);
    }
    // curve of higher degree on the left, infinity on the right
    auto h = linear_equiv_invariance_check(div(curve("t^3-2")), div(ProjectiveCurve::infinity()) + div(sec(1, 2)),
                                           F("(t^2+t+1)/(5*t-4)"));
    CHECK(h.residual < 1e-8);
    CHECK(h.residual <= h.bound + 1e-12);
    CHECK_THROWS_AS(linear_equiv_invariance_check(div(sec(2)), div(sec(1)), F("t-2")), SupportOverlapError);
}

TEST_CASE("canonical divisor")
{
    auto K = canonical_divisor();
    CHECK(K.degree() == -2);
    CHECK(K.horizontal.at(ProjectiveCurve::infinity()) == -2);
    CHECK(std::fabs(K.a_inf - (c - 1)) < 1e-10);
    CHECK(std::fabs(K.a_inf - canonical_divisor(QuadConfig{}.refined()).a_inf) < 1e-8);
    // d(t - 5) = dt
    auto K5 = canonical_divisor(QRatFunc(parse_polynomial("1")));
    CHECK(K5.horizontal == K.horizontal);
    CHECK(K5.a_inf == K.a_inf);
    // dt / (t-1)^2 differs by a principal divisor
    auto K1 = canonical_divisor(F("1/(t-1)^2"));
    CHECK(K1.horizontal.at(sec(1)) == -2);
    CHECK(K1.horizontal.count(ProjectiveCurve::infinity()) == 0);
    auto p = arakelov_pairing(div(sec(3)), K), p1 = arakelov_pairing(div(sec(3)), K1);
    CHECK(std::fabs(p.total - p1.total) < 1e-9);
}

TEST_CASE("self-intersection")
{
    for (auto C : {sec(0), sec(1), sec(-3, 4), ProjectiveCurve::infinity()}) {
        auto s7 = self_intersection(div(C), 7), s11 = self_intersection(div(C), 11);
        CHECK(std::fabs(s7.total - s11.total) < 1e-6);
        auto shifted = div(C) + ArakelovDivisor::fiber_at_infinity(0.3);
        CHECK(std::fabs(self_intersection(shifted, 7).total - (s7.total + 2 * 0.3)) < 1e-9);
    }
    CHECK(std::fabs(self_intersection(div(sec(0))).total + c) < 1e-9);
    CHECK_THROWS(self_intersection(div(sec(7)), 7));
    CHECK_THROWS(self_intersection(div(curve("t^2+1"))));
}

TEST_CASE("adjunction")
{
    for (auto C : {sec(0), sec(1), ProjectiveCurve::infinity(), sec(7), sec(-5, 3)}) {
        auto w = adjunction_check(C);
        CHECK(w.holds);
        CHECK(w.residual < 1e-8);
    }
    CHECK_THROWS(adjunction_check(curve("t^2+1")));
}

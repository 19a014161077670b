#include "doctest.h"

#include <cmath>

#include "generators.hpp"
#include "numfun/heights.hpp"

using namespace numfun;
using namespace numfun::testing;

namespace {

ProjectivePoint pp(long a, long b) { return ProjectivePoint({Integer(a), Integer(b)}); }

struct Battery {
    EllipticCurve E;
    std::vector<ECPoint> points;
};

std::vector<Battery> battery()
{
    auto pt = [](long x, long y) { return ECPoint::affine(Rational(x), Rational(y)); };
    return {
        {EllipticCurve(Rational(0), Rational(-2)), {pt(3, 5)}},
        {EllipticCurve(Rational(0), Rational(17)), {pt(-2, 3), pt(-1, 4), pt(2, 5), pt(4, 9), pt(8, 23)}},
        {EllipticCurve(Rational(-1), Rational(1)), {pt(1, 1)}},
        {EllipticCurve(Rational(0), Rational(3)), {pt(1, 2)}},
        {EllipticCurve(Rational(-25), Rational(0)), {pt(-4, 6)}},
        {EllipticCurve(Rational(-36), Rational(0)), {pt(-3, 9), pt(12, 36)}},
    };
}

}  // namespace

TEST_CASE("naive and multi-place heights")
{
    CHECK(naive_height(pp(3, 5)).exact->to_string() == "log(5)");
    CHECK(naive_height(pp(1, 0)).exact->is_zero());
    CHECK(pp(6, 10) == pp(3, 5));
    CHECK(naive_height(pp(6, 10)).exact->to_string() == "log(5)");
    CHECK(pp(-3, 5) == pp(3, -5));
    CHECK_THROWS_AS(pp(0, 0), ZeroInputError);

    auto m = multi_place_height({make_rational(12, 5), Rational(2)});
    CHECK(m.product == 6);
    CHECK(ProjectivePoint::from_rationals({make_rational(12, 5), Rational(2)}) == pp(6, 5));
    CHECK(multi_place_height({Rational(3), Rational(5)}).product == 5);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Rational> c;
        std::size_t len = 2 + static_cast<std::size_t>(i % 3);
        for (std::size_t k = 0; k < len; ++k)
            c.push_back(random_rational(rng, 1000, k > 0));
        auto h = multi_place_height(c);
        REQUIRE(h.product == Rational(ProjectivePoint::from_rationals(c).max_abs()));
        Rational lambda = random_rational(rng, 1000);
        for (auto& q : c)
            q *= lambda;
        REQUIRE(multi_place_height(c).product == h.product);
    }
}

TEST_CASE("enumeration and finiteness")
{
    auto one = enumerate_points(1, 1);
    REQUIRE(one.size() == 4);
    CHECK(enumerate_points(1, 2).size() == 8);
    CHECK(enumerate_points(1, 0).empty());
    std::vector<ProjectivePoint> expected{pp(0, 1), pp(1, -1), pp(1, 0), pp(1, 1)};
    CHECK(one == expected);

    std::size_t previous = 0;
    for (long H = 1; H <= 100; ++H) {
        auto pts = enumerate_points(1, H);
        // independent count: coprime pairs (x, y), max <= H, up to sign
        std::size_t count = 0;
        for (long x = -H; x <= H; ++x)
            for (long y = -H; y <= H; ++y)
                if (std::gcd(x, y) == 1 && (x > 0 || (x == 0 && y > 0)))
                    ++count;
        REQUIRE(pts.size() == count);
        REQUIRE(pts.size() >= previous);
        previous = pts.size();
        for (const auto& P : pts)
            REQUIRE(P.max_abs() <= H);
    }
    CHECK(enumerate_points(2, 1).size() == 13);
}

TEST_CASE("power map functoriality")
{
    CHECK(power_map_functoriality_check(pp(3, 5), 2).lhs.to_string() == "2 * log(5)");
    CHECK(power_map_functoriality_check(pp(1, 1), 7).holds);
    CHECK(power_map_functoriality_check(pp(2, 3), 3).lhs.to_string() == "3 * log(3)");
    for (const auto& P : enumerate_points(1, 30))
        for (long d = 1; d <= 5; ++d)
            REQUIRE(power_map_functoriality_check(P, d).holds);
}

TEST_CASE("group law")
{
    EllipticCurve E(Rational(0), Rational(-2));
    auto P = ECPoint::affine(Rational(3), Rational(5));
    auto twoP = ec_double(E, P);
    CHECK(twoP == ECPoint::affine(make_rational(129, 100), make_rational(-383, 1000)));
    CHECK(ec_add(E, P, ECPoint::at_infinity()) == P);
    CHECK(ec_add(E, P, ec_negate(E, P)).infinity);
    CHECK_THROWS(ec_add(E, P, ECPoint::affine(Rational(1), Rational(1))));
    CHECK_THROWS(EllipticCurve(Rational(0), Rational(0)));
    // associativity and multiplication on a battery curve
    EllipticCurve F(Rational(0), Rational(17));
    auto Q = ECPoint::affine(Rational(-2), Rational(3)), S = ECPoint::affine(Rational(-1), Rational(4));
    CHECK(ec_add(F, ec_add(F, Q, S), Q) == ec_add(F, Q, ec_add(F, S, Q)));
    CHECK(ec_multiply(F, 5, Q) == ec_add(F, ec_double(F, ec_double(F, Q)), Q));
    CHECK(ec_multiply(F, -3, Q) == ec_negate(F, ec_multiply(F, 3, Q)));
    CHECK(ec_multiply(F, 0, Q).infinity);
}

TEST_CASE("canonical height tracker matches exact doubling")
{
    for (const auto& [E, points] : battery())
        for (const auto& P : points) {
            auto h = canonical_height(E, P, 1e-10);
            ECPoint Q = P;
            long double scale = 1;
            for (std::size_t n = 0; n < 6 && n < h.partial.size(); ++n) {
                long double exact = static_cast<long double>(x_height(Q).exact->value()) / scale;
                REQUIRE(std::fabs(static_cast<double>(exact - h.partial[n])) < 1e-12);
                Q = ec_double(E, Q);
                scale *= 4;
            }
        }
}

TEST_CASE("canonical height properties")
{
    const double tol = 1e-8;
    EllipticCurve E(Rational(0), Rational(-2));
    auto P = ECPoint::affine(Rational(3), Rational(5));
    auto h = canonical_height(E, P, tol);
    CHECK(h.value.approx > 0);
    CHECK(h.value.error_bound < tol);
    CHECK(canonical_height(E, P, tol).value.approx == h.value.approx);

    EllipticCurve T(Rational(0), Rational(1));
    auto two_torsion = canonical_height(T, ECPoint::affine(Rational(-1), Rational(0)), tol);
    CHECK(two_torsion.torsion);
    CHECK(two_torsion.value.approx == 0);
    CHECK(canonical_height(T, ECPoint::affine(Rational(2), Rational(3)), tol).torsion);  // order 6

    double worst_gap = 0;
    for (const auto& [C, points] : battery()) {
        for (const auto& Q : points) {
            auto hq = canonical_height(C, Q, tol);
            auto oracle = canonical_height(C, Q, 1e-12);
            REQUIRE(std::fabs(hq.value.approx - oracle.value.approx) <= hq.value.error_bound);
            auto h2 = canonical_height(C, ec_double(C, Q), tol);
            REQUIRE(std::fabs(h2.value.approx - 4 * hq.value.approx) < 10 * tol);
            worst_gap = std::max(worst_gap, std::fabs(hq.value.approx - x_height(Q).approx));
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                const auto &Q1 = points[i], &Q2 = points[j];
                double s = canonical_height(C, ec_add(C, Q1, Q2), tol).value.approx;
                double d = canonical_height(C, ec_add(C, Q1, ec_negate(C, Q2)), tol).value.approx;
                double a = canonical_height(C, Q1, tol).value.approx, b = canonical_height(C, Q2, tol).value.approx;
                REQUIRE(std::fabs(s + d - 2 * a - 2 * b) < 10 * tol);
            }
    }
    MESSAGE("max |h_hat - h| over the battery: " << worst_gap);
    CHECK(worst_gap < 10);
}

TEST_CASE("rational coefficients")
{
    // y^2 = x^3 + x/4 + 1/64 has the same limit in any integral model
    EllipticCurve E(make_rational(-1, 4), Rational(1));
    auto P = ECPoint::affine(Rational(0), Rational(1));
    auto h = canonical_height(E, P, 1e-10);
    ECPoint Q = P;
    for (int n = 0; n < 4; ++n)
        Q = ec_double(E, Q);
    double rough = x_height(Q).approx / 256.0;
    CHECK(std::fabs(rough - h.value.approx) < 0.05);
}

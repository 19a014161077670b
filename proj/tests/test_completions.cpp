#include "doctest.h"

#include "generators.hpp"
#include "numfun/completions.hpp"
#include "numfun/parse.hpp"
#include "numfun/poly_factor.hpp"

using namespace numfun;
using namespace numfun::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> r;
    for (long x : v)
        r.emplace_back(x);
    return r;
}

std::vector<Rational> rats(std::initializer_list<long> v)
{
    std::vector<Rational> r;
    for (long x : v)
        r.emplace_back(x);
    return r;
}

}  // namespace

TEST_CASE("3-adic digits of 2 and 1/5")
{
    auto two = p_adic_digits(Rational(2), Integer(3), 3);
    CHECK(two.start == 0);
    CHECK(two.digits == ints({2, 0, 0}));
    auto fifth = p_adic_digits(make_rational(1, 5), Integer(3), 3);
    CHECK(fifth.start == 0);
    CHECK(fifth.digits == ints({2, 0, 1}));
    auto twelve = p_adic_digits(Rational(12), Integer(2), 3);
    CHECK(twelve.start == 2);
    CHECK(twelve.digits == ints({1, 1, 0}));
    CHECK(p_adic_digits(Rational(0), Integer(7), 4).zero);
    CHECK_THROWS_AS(p_adic_digits(Rational(3), Integer(6), 2), NotPrimeError);
    // -1 = (p-1)(1 + p + p^2 + ...)
    CHECK(p_adic_digits(Rational(-1), Integer(5), 4).digits == ints({4, 4, 4, 4}));
    CHECK(to_string(fifth) == "start 0, digits [2,0,1]");
}

TEST_CASE("p-adic round trip")
{
    std::mt19937_64 rng(11);
    const long primes[] = {2, 3, 5, 7, 11, 13, 101};
    std::uniform_int_distribution<int> pick(0, 6), prec(0, 12);
    for (int i = 0; i < 1000; ++i) {
        Rational f = random_rational(rng, 1000000);
        Integer p(primes[pick(rng)]);
        long n = prec(rng);
        auto e = p_adic_digits(f, p, n);
        REQUIRE(e.start == valuation(f, p));
        REQUIRE(static_cast<long>(e.digits.size()) == n);
        for (const auto& d : e.digits)
            REQUIRE((d >= 0 && d < p));
        if (n > 0)
            REQUIRE(e.digits.front() != 0);
        Rational diff = f - e.partial_sum();
        if (sgn(diff) != 0)
            REQUIRE(valuation(diff, p) >= e.start + n);
    }
}

TEST_CASE("function-field expansion at points of any degree")
{
    std::mt19937_64 rng(12);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = primes[i % 4];
        FpRatFunc F = random_fp_ratfunc(rng, p, 5);
        if (F.is_zero())
            continue;
        // random monic irreducible of degree 1..3
        FpPoly P = fppoly({0, 1}, p);
        do {
            P = random_fp_poly(rng, p, 3);
        } while (P.degree() < 1 || !is_irreducible_mod_p(P.monic()));
        P = P.monic();
        long n = i % 6;
        auto e = p_adic_digits(F, P, n);
        REQUIRE(e.start == val(F, function_field_point(P)).value);
        for (const auto& d : e.digits)
            REQUIRE(d.degree() < P.degree());
        if (n > 0)
            REQUIRE(!e.digits.front().is_zero());
        FpRatFunc diff = F - e.partial_sum();
        if (!diff.is_zero())
            REQUIRE(val(diff, function_field_point(P)).value >= e.start + n);
    }
}

TEST_CASE("laurent examples")
{
    auto geo = laurent_at(parse_rational_function("1/(1-t)"), Rational(0), 3);
    CHECK(geo.start == 0);
    CHECK(geo.coefficients == rats({1, 1, 1}));
    auto inv = laurent_at(parse_rational_function("1/t"), Rational(0), 2);
    CHECK(inv.start == -1);
    CHECK(inv.coefficients == rats({1, 0}));
    auto at_inf = laurent_at(parse_rational_function("t"), std::nullopt, 2);
    CHECK(at_inf.start == -1);
    CHECK(at_inf.coefficients == rats({1, 0}));
    // 1/(t^2-1) at 1: 1/(u(u+2)) = (1/2)u^-1 - 1/4 + ...
    auto pole = laurent_at(parse_rational_function("1/(t^2-1)"), Rational(1), 3);
    CHECK(pole.start == -1);
    CHECK(pole.coefficients == std::vector<Rational>{make_rational(1, 2), make_rational(-1, 4), make_rational(1, 8)});
    CHECK(laurent_at(QRatFunc::constant(Rational(0)), Rational(0), 3).zero);
}

TEST_CASE("laurent truncation error has the claimed valuation")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> prec(0, 8), center(-3, 3);
    for (int i = 0; i < 300; ++i) {
        QRatFunc F = random_q_ratfunc(rng, 4, 9);
        if (F.is_zero())
            continue;
        long n = prec(rng);
        bool infinity = (i % 5 == 0);
        std::optional<Rational> t0;
        Place v = RationalInfinity{};
        if (!infinity) {
            t0 = Rational(center(rng));
            v = RationalPoint{*t0};
        }
        auto e = laurent_at(F, t0, n);
        REQUIRE(e.start == val(F, v).value);
        QRatFunc diff = F - e.partial_sum();
        if (!diff.is_zero())
            REQUIRE(val(diff, v).value >= e.start + n);
    }
}

TEST_CASE("series arithmetic")
{
    auto f = series_at(parse_rational_function("(t+2)/(t^2-3)"), Rational(0), 10);
    auto g = f.inverse_series();
    auto one = f * g;
    CHECK(one.coefficient(0) == 1);
    for (long i = 1; i < 10; ++i)
        CHECK(one.coefficient(i) == 0);
    CHECK_THROWS_AS(one.coefficient(10), PrecisionError);
    auto d = series_of(qpoly({1, 2, 3})).derivative();
    CHECK(d.coefficient(0) == 2);
    CHECK(d.coefficient(1) == 6);
}

TEST_CASE("metric")
{
    CHECK(metric(Rational(2), make_rational(1, 5), finite_prime(Integer(3))) == make_rational(1, 9));
    CHECK(metric(Rational(4), Rational(4), finite_prime(Integer(3))) == 0);
    auto x = parse_rational_function("t");
    auto y = parse_rational_function("t + t^3");
    CHECK(metric(x, y, RationalPoint{Rational(0)}, Rational(2)) == make_rational(1, 8));
    CHECK(metric(x, y, RationalPoint{Rational(0)}, Rational(3)) == make_rational(1, 27));
    FpRatFunc a(fppoly({0, 1}, 3)), b(fppoly({1, 1, 1}, 3));
    // a - b = -(t^2 + 1): order 1 at t^2+1, residue field of size 9
    CHECK(metric(a, b, function_field_point(fppoly({1, 0, 1}, 3))) == make_rational(1, 9));

    std::mt19937_64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        Rational p = random_rational(rng, 200), q = random_rational(rng, 200), r = random_rational(rng, 200);
        Place v = finite_prime(Integer(i % 2 ? 2 : 3));
        REQUIRE(metric(p, r, v) <= std::max(metric(p, q, v), metric(q, r, v)));
    }
    for (int i = 0; i < 200; ++i) {
        auto p = random_q_ratfunc(rng, 3, 5), q = random_q_ratfunc(rng, 3, 5), r = random_q_ratfunc(rng, 3, 5);
        Place v = RationalPoint{Rational(i % 3)};
        REQUIRE(metric(p, r, v) <= std::max(metric(p, q, v), metric(q, r, v)));
    }
}

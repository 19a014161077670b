#include <random>

#include "doctest.h"

#include "numfun/exact_log.hpp"
#include "numfun/parse.hpp"
#include "numfun/poly_factor.hpp"

using namespace numfun;

namespace {

// Independent irreducibility check: trial division by every monic
// polynomial of degree 1..deg/2 over F_p.
bool brute_force_irreducible(const FpPoly& f)
{
    const std::uint64_t p = f.one().modulus();
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
        for (;;) {
            std::vector<Fp> c;
            for (auto v : digits)
                c.emplace_back(v, p);
            c.emplace_back(1, p);
            FpPoly g(std::move(c), f.one());
            if ((f % g).is_zero())
                return false;
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == p)
                digits[i++] = 0;
            if (i == digits.size())
                break;
        }
    }
    return n >= 1;
}

FpPoly random_fp_poly(std::mt19937_64& rng, std::uint64_t p, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    std::vector<Fp> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        c.emplace_back(coef(rng), p);
    return FpPoly(std::move(c), Fp(1, p));
}

}  // namespace

TEST_CASE("gcd")
{
    CHECK(gcd(Integer(12), Integer(18)) == 6);
    CHECK(gcd(Integer(0), Integer(7)) == 7);
    CHECK(gcd(Integer(-4), Integer(6)) == 2);
    CHECK(gcd(Integer(0), Integer(0)) == 0);
}

TEST_CASE("factor_integer examples")
{
    auto f12 = factor_integer(Integer(12));
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<Integer, unsigned>(2, 2));
    CHECK(f12.factors[1] == std::pair<Integer, unsigned>(3, 1));
    auto f7 = factor_integer(Integer(-7));
    CHECK(f7.sign == -1);
    CHECK(f7.factors.size() == 1);
    auto f1 = factor_integer(Integer(1));
    CHECK(f1.sign == 1);
    CHECK(f1.factors.empty());
    CHECK_THROWS_AS(factor_integer(Integer(0)), ZeroInputError);
}

TEST_CASE("factor_integer reconstructs random inputs and large semiprimes")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1000000000L, 1000000000L);
    for (int i = 0; i < 1000; ++i) {
        long n = dist(rng);
        if (n == 0)
            continue;
        auto f = factor_integer(Integer(n));
        CHECK(f.product() == n);
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            CHECK(is_prime(f.factors[k].first));
            CHECK(f.factors[k].second >= 1);
            if (k)
                CHECK(f.factors[k - 1].first < f.factors[k].first);
        }
    }
    Integer big = Integer("2305843009213693951") * Integer("1000000007") * Integer("1000000007");
    auto f = factor_integer(big);
    CHECK(f.product() == big);
    CHECK(f.factors.size() == 2);
}

TEST_CASE("factor_poly_mod_p examples")
{
    auto a = factor_poly_mod_p(fppoly({1, 0, 1}, 3));
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0].first == fppoly({1, 0, 1}, 3));
    CHECK(a.factors[0].second == 1);

    auto b = factor_poly_mod_p(fppoly({-1, 0, 1}, 3));
    REQUIRE(b.factors.size() == 2);
    CHECK(b.factors[0].first == fppoly({1, 1}, 3));
    CHECK(b.factors[1].first == fppoly({2, 1}, 3));

    auto c = factor_poly_mod_p(fppoly({0, 0, 1}, 5));
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0].first == fppoly({0, 1}, 5));
    CHECK(c.factors[0].second == 2);

    CHECK_THROWS_AS(factor_poly_mod_p(FpPoly(Fp(1, 5))), ZeroInputError);
}

TEST_CASE("factor_poly_mod_p re-multiplies and factors pass brute-force irreducibility")
{
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 23u}) {
        for (int trial = 0; trial < 60; ++trial) {
            int max_deg = static_cast<int>(std::min<std::uint64_t>(10, 200 / p));
            FpPoly f = random_fp_poly(rng, p, max_deg);
            if (f.is_zero())
                continue;
            // Squares and repeated factors exercise the squarefree stage.
            if (trial % 4 == 0 && 2 * f.degree() <= max_deg)
                f = f * f;
            auto fac = factor_poly_mod_p(f);
            CHECK(fac.product() == f);
            for (const auto& [g, e] : fac.factors) {
                CHECK(g.leading() == g.one());
                CHECK(brute_force_irreducible(g));
            }
        }
    }
}

TEST_CASE("factor_poly_mod_p handles p-th powers in characteristic p")
{
    // (t + 1)^6 over F_3 has zero derivative after the first pass.
    FpPoly f = fppoly({1, 1}, 3).pow(6) * fppoly({1, 0, 1}, 3);
    auto fac = factor_poly_mod_p(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0] == std::pair<FpPoly, unsigned>(fppoly({1, 1}, 3), 6));
    CHECK(fac.factors[1] == std::pair<FpPoly, unsigned>(fppoly({1, 0, 1}, 3), 1));
}

TEST_CASE("resultant examples")
{
    CHECK(abs(resultant(qpoly({0, 1}), qpoly({-2, 1}))) == 2);
    CHECK(resultant(qpoly({0, 1}), qpoly({-2, 1})) == -2);  // f rows first
    CHECK(resultant(qpoly({-3, 1}), qpoly({-3, 1})) == 0);
    CHECK(resultant(qpoly({-1, 5}), qpoly({-2, 1})) == -9);
    // Constant polynomial: Res(c, g) = c^deg g.
    CHECK(resultant(qpoly({3}), qpoly({1, 0, 1})) == 9);
    CHECK_THROWS_AS(resultant(QPoly(Rational(1)), qpoly({1, 1})), ZeroInputError);
}

TEST_CASE("resultant vanishes exactly when the gcd is nontrivial")
{
    std::mt19937_64 rng(13);
    int common = 0;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 31u, 97u}) {
        for (int trial = 0; trial < 150; ++trial) {
            FpPoly f = random_fp_poly(rng, p, 8), g = random_fp_poly(rng, p, 8);
            if (trial % 3 == 0) {
                FpPoly h = random_fp_poly(rng, p, 3);
                f = f * h;
                g = g * h;
            }
            if (f.is_zero() || g.is_zero())
                continue;
            bool zero_res = resultant(f, g).is_zero();
            bool shared = poly_gcd(f, g).degree() >= 1;
            CHECK(zero_res == shared);
            common += shared;
        }
    }
    CHECK(common > 50);
}

TEST_CASE("poly_gcd")
{
    CHECK(poly_gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
    CHECK(poly_gcd(qpoly({0, 1}), qpoly({1, 1})) == qpoly({1}));
    CHECK(poly_gcd(QPoly(Rational(1)), qpoly({0, 0, 1})) == qpoly({0, 0, 1}));
}

TEST_CASE("reduce_mod_p")
{
    CHECK(reduce_mod_p(qpoly({-2, 1}), PrimeField(2u)) == fppoly({0, 1}, 2));
    CHECK(reduce_mod_p(qpoly({-1, 5}), PrimeField(3u)) == fppoly({2, 2}, 3));
    QPoly half({Rational(0), Rational(1, 2)}, Rational(1));
    CHECK_THROWS_AS(reduce_mod_p(half, PrimeField(2u)), NotIntegralError);
    CHECK_THROWS_AS(PrimeField(9u), NotPrimeError);
}

TEST_CASE("factor_over_q")
{
    auto f = factor_over_q(parse_polynomial("(t^2-2)*(t^2+1)*(2t-1)^2*3"));
    CHECK(f.product() == parse_polynomial("(t^2-2)*(t^2+1)*(2t-1)^2*3"));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].first == qpoly({-1, 2}));
    CHECK(f.factors[0].second == 2);
    CHECK(is_irreducible_over_q(qpoly({1, 0, 0, 0, 1})));  // splits mod every prime
    CHECK(!is_irreducible_over_q(qpoly({4, 0, 0, 0, 1})));  // (t^2+2t+2)(t^2-2t+2)
    auto g = factor_over_q(qpoly({4, 0, 0, 0, 1}));
    CHECK(g.factors.size() == 2);
    CHECK(is_irreducible_over_q(qpoly({-1, 5})));
}

TEST_CASE("factor_over_q on random products")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int trial = 0; trial < 80; ++trial) {
        QPoly f = qpoly({1});
        int parts = 1 + trial % 3;
        for (int k = 0; k < parts; ++k) {
            std::vector<Rational> c;
            int d = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < d; ++i)
                c.emplace_back(coef(rng));
            c.emplace_back(1 + static_cast<long>(rng() % 3));
            f *= QPoly(std::move(c), Rational(1));
        }
        auto fac = factor_over_q(f);
        CHECK(fac.product() == f);
        for (const auto& [g, e] : fac.factors) {
            CHECK(content(g) == 1);
            CHECK(sgn(g.leading()) > 0);
            // Irreducible over Q implies irreducible over F_p for some p, or
            // at least no rational root: cheap necessary check.
            if (g.degree() >= 2)
                for (long r = -12; r <= 12; ++r)
                    CHECK(!is_zero(g.evaluate(Rational(r))));
        }
    }
}

TEST_CASE("ExactLog algebra")
{
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> dist(1, 100000);
    for (int i = 0; i < 200; ++i) {
        Rational a = make_rational(dist(rng), dist(rng)), b = make_rational(dist(rng), dist(rng));
        CHECK((ExactLog(a) + ExactLog(b)).arg() == a * b);
        CHECK((ExactLog(a) - ExactLog(a)).is_zero());
    }
    CHECK(ExactLog::of_prime_power(Integer(3), 2).to_string() == "2 * log(3)");
    CHECK(ExactLog(make_rational(12, 5)).to_string() == "2 * log(2) + log(3) - log(5)");
    CHECK(ExactLog(Rational(1)).to_string() == "0");
    CHECK(ExactLog(Rational(9)).value() == doctest::Approx(std::log(9.0)));
    CHECK_THROWS(ExactLog(Rational(-1)));
}

TEST_CASE("expression grammar")
{
    CHECK(parse_polynomial("5t-1") == qpoly({-1, 5}));
    CHECK(parse_polynomial("5*t - 1") == qpoly({-1, 5}));
    CHECK(parse_polynomial("t^2+1") == qpoly({1, 0, 1}));
    CHECK(parse_polynomial("-(t-2)^2") == qpoly({-4, 4, -1}));
    auto f = parse_rational_function("(t^2+1)/t");
    CHECK(f.num() == qpoly({1, 0, 1}));
    CHECK(f.den() == qpoly({0, 1}));
    auto g = parse_rational_function("1/(2t)");
    CHECK(g.num() == QPoly::constant(Rational(1, 2)));
    CHECK(parse_rational_function("t^-1") == parse_rational_function("1/t"));
    CHECK(parse_polynomial("1/2 t") == QPoly({Rational(0), Rational(1, 2)}, Rational(1)));
    CHECK_THROWS_AS(parse_rational_function("t+"), ParseError);
    CHECK_THROWS_AS(parse_rational_function("1/0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/t"), ParseError);
    CHECK(to_string(qpoly({-1, 5})) == "5*t - 1");
    CHECK(to_string(qpoly({1, 0, 1})) == "t^2 + 1");
}

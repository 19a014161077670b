#include "doctest.h"

#include "generators.hpp"
#include "numfun/parse.hpp"
#include "numfun/symbols.hpp"

using namespace numfun;
using namespace numfun::testing;

namespace {

Place at(long p) { return finite_prime(Integer(p)); }
QRatFunc F(const char* s) { return parse_rational_function(s); }

}  // namespace

TEST_CASE("legendre")
{
    CHECK(legendre(Integer(2), Integer(7)) == 1);
    CHECK(legendre(Integer(3), Integer(5)) == -1);
    CHECK(legendre(Integer(14), Integer(7)) == 0);
    CHECK(legendre(Integer(-1), Integer(13)) == 1);
    CHECK_THROWS_AS(legendre(Integer(3), Integer(2)), NotPrimeError);
    CHECK_THROWS_AS(legendre(Integer(3), Integer(9)), NotPrimeError);
    // brute-force squares
    for (long p : {3L, 5L, 7L, 11L, 13L, 29L, 97L}) {
        std::vector<bool> sq(static_cast<std::size_t>(p), false);
        for (long z = 1; z < p; ++z)
            sq[static_cast<std::size_t>(z * z % p)] = true;
        for (long a = 1; a < p; ++a)
            REQUIRE(legendre(Integer(a), Integer(p)) == (sq[static_cast<std::size_t>(a)] ? 1 : -1));
    }
}

TEST_CASE("hilbert examples")
{
    CHECK(hilbert_quadratic(Rational(-1), Rational(-1), ArchimedeanQ{}) == -1);
    CHECK(hilbert_quadratic(Rational(-1), Rational(-1), at(2)) == -1);
    CHECK(hilbert_quadratic(Rational(2), Rational(7), at(7)) == 1);
    CHECK(hilbert_quadratic(Rational(3), Rational(3), at(3)) == -1);
    CHECK(hilbert_quadratic(Rational(2), Rational(3), at(2)) == -1);
    CHECK(hilbert_oracle(Rational(-1), Rational(-1), at(2)) == -1);
    CHECK(hilbert_oracle(Rational(2), Rational(7), at(7)) == 1);
    CHECK_THROWS_AS(hilbert_quadratic(Rational(0), Rational(3), at(3)), ZeroInputError);
    CHECK_THROWS_AS(hilbert_quadratic(Rational(1), Rational(3), RationalInfinity{}), WorldMismatchError);
}

TEST_CASE("hilbert closed form against the search oracle")
{
    std::mt19937_64 rng(21);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 47L, 101L}) {
        for (int i = 0; i < 300; ++i) {
            Rational a = random_rational(rng, 60), b = random_rational(rng, 60);
            a *= pow(Rational(p), static_cast<long>(i % 5) - 2);
            REQUIRE(hilbert_quadratic(a, b, at(p)) == hilbert_oracle(a, b, at(p)));
        }
    }
}

TEST_CASE("hilbert bilinearity and symmetry")
{
    std::mt19937_64 rng(22);
    std::vector<Place> places{ArchimedeanQ{}, at(2), at(3), at(5), at(7)};
    for (const auto& v : places)
        for (int i = 0; i < 1000; ++i) {
            Rational l = random_rational(rng, 100), l2 = random_rational(rng, 100), m = random_rational(rng, 100);
            REQUIRE(hilbert_quadratic(l * l2, m, v) == hilbert_quadratic(l, m, v) * hilbert_quadratic(l2, m, v));
            REQUIRE(hilbert_quadratic(l * l, m, v) == 1);
            REQUIRE(hilbert_quadratic(l, m, v) == hilbert_quadratic(m, l, v));
        }
}

TEST_CASE("hilbert product formula")
{
    auto w = hilbert_product_check(Rational(-1), Rational(-1));
    CHECK(w.holds);
    CHECK(w.places == std::vector<std::string>{"2", "inf"});
    CHECK(hilbert_product_check(Rational(3), Rational(5)).holds);
    CHECK(hilbert_product_check(Rational(1), make_rational(-7, 3)).places.empty());
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b)
            if (a && b)
                REQUIRE(hilbert_product_check(Rational(a), Rational(b)).holds);
}

TEST_CASE("gauss reciprocity")
{
    auto w = gauss_reciprocity_check(Integer(3), Integer(5));
    CHECK(w.legendre_ab == -1);
    CHECK(w.legendre_ba == -1);
    CHECK(w.sign == 1);
    CHECK(w.holds());
    auto w2 = gauss_reciprocity_check(Integer(3), Integer(7));
    CHECK(w2.sign == -1);
    CHECK(w2.holds());
    CHECK(gauss_reciprocity_check(Integer(5), Integer(13)).sign == 1);
    CHECK_THROWS(gauss_reciprocity_check(Integer(5), Integer(5)));
    CHECK_THROWS(gauss_reciprocity_check(Integer(2), Integer(5)));
}

TEST_CASE("tame symbol")
{
    CHECK(tame_symbol(F("t"), F("t"), Rational(0)) == -1);
    CHECK(tame_symbol(F("t"), F("1-t"), Rational(0)) == 1);
    CHECK(tame_symbol(F("t^2"), F("t"), Rational(0)) == 1);
    CHECK(tame_symbol(F("3"), F("t"), Rational(0)) == make_rational(1, 3));
    CHECK_THROWS_AS(tame_symbol(F("0"), F("t"), Rational(0)), ZeroInputError);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 500; ++i) {
        auto f1 = random_laurent(rng, -4, 4, 3, 9), f2 = random_laurent(rng, -4, 4, 3, 9);
        auto g = random_laurent(rng, -4, 4, 3, 9);
        REQUIRE(tame_symbol(f1 * f2, g) == tame_symbol(f1, g) * tame_symbol(f2, g));
        REQUIRE(tame_symbol(g, f1 * f2) == tame_symbol(g, f1) * tame_symbol(g, f2));
    }
    // Steinberg relation on rational functions where f and 1 - f have finite order
    for (int i = 0; i < 200; ++i) {
        QRatFunc f = random_q_ratfunc(rng, 3, 6);
        QRatFunc one_minus = QRatFunc::constant(Rational(1)) - f;
        if (f.is_zero() || one_minus.is_zero())
            continue;
        REQUIRE(tame_symbol(f, one_minus, Rational(0)) == 1);
    }
}

TEST_CASE("residue examples")
{
    CHECK(residue(F("1/t"), F("t"), Rational(0)) == 1);
    CHECK(residue(F("1/(t^2-1)"), F("t"), Rational(1)) == make_rational(1, 2));
    CHECK(residue(F("1/(t^2-1)"), F("t"), Rational(-1)) == make_rational(-1, 2));
    CHECK(residue(F("1/(t^2-1)"), F("t"), std::nullopt) == 0);
    CHECK(residue(F("t"), F("t"), Rational(0)) == 0);
    CHECK(residue(F("1/t"), F("t"), std::nullopt) == -1);
    // dt/t^2 has no residue; d(log t) has residue 1 at 0
    CHECK(residue(F("1/t^2"), F("t"), Rational(0)) == 0);
    CHECK(residue(F("1/t"), F("t^3"), Rational(0)) == 0);
    CHECK(residue(F("1"), F("t^-2"), std::nullopt) == 0);
    auto s = series_at(F("1/t"), Rational(0), 1);
    CHECK_THROWS_AS(s.truncated(-1).residue(), PrecisionError);
}

TEST_CASE("residue theorem")
{
    auto w = residue_sum_check(F("1/(t^2-1)"), F("t"));
    CHECK(w.holds);
    CHECK(residue_sum_check(F("1"), F("t")).holds);
    auto w2 = residue_sum_check(F("1/t"), F("t"));
    CHECK(w2.holds);
    CHECK(w2.terms.size() == 2);
    // irrational poles: residues of dt/(t^2+1) at +-i sum to 0; of t dt/(t^2+1) to 1
    auto w3 = residue_sum_check(F("t/(t^2+1)"), F("t"));
    CHECK(w3.holds);
    CHECK(w3.terms.front().residue == 1);
    CHECK(w3.terms.back().residue == -1);

    std::mt19937_64 rng(24);
    for (int i = 0; i < 300; ++i) {
        QRatFunc f = random_q_ratfunc(rng, 6, 5), g = random_q_ratfunc(rng, 6, 5);
        if (f.is_zero() || g.is_zero())
            continue;
        REQUIRE(residue_sum_check(f, g).holds);
    }
}

TEST_CASE("residue pairing")
{
    auto t = LaurentSeries<Rational>::monomial(Rational(1), 1);
    auto tinv = LaurentSeries<Rational>::monomial(Rational(1), -1);
    CHECK(residue_pairing(tinv, t) == 1);
    CHECK(residue_pairing(t, t) == 0);
    CHECK(residue_pairing(LaurentSeries<Rational>::monomial(Rational(2), -2),
                          LaurentSeries<Rational>::monomial(Rational(3), 2)) == 12);
    auto short_b = LaurentSeries<Rational>(-1, {Rational(1)}, 0, Rational(1));
    CHECK_THROWS_AS(residue_pairing(LaurentSeries<Rational>::monomial(Rational(1), -3), short_b), PrecisionError);

    std::mt19937_64 rng(25);
    for (int i = 0; i < 1000; ++i) {
        auto A = random_laurent(rng, -5, 5, 12, 20), B = random_laurent(rng, -5, 5, 12, 20);
        REQUIRE(residue_pairing(A, B) + residue_pairing(B, A) == 0);
        // res(A dB) is the residue of the product series A * B'
        auto direct = (A * B.derivative());
        if (direct.known_until() > -1)
            REQUIRE(direct.coefficient(-1) == residue_pairing(A, B));
    }
}

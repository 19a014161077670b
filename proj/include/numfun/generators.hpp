#pragma once

// Random inputs shared by the property tests and the verification suites.

#include <random>

#include "numfun/laurent_series.hpp"
#include "numfun/rational_function.hpp"

namespace numfun::gen {

inline Rational random_rational(std::mt19937_64& rng, long bound, bool allow_zero = false)
{
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    for (;;) {
        Rational q = make_rational(num(rng), den(rng));
        if (allow_zero || sgn(q) != 0)
            return q;
    }
}

inline FpPoly random_fp_poly(std::mt19937_64& rng, std::uint64_t p, int max_degree, bool nonzero = true)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    for (;;) {
        std::vector<Fp> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i)
            c.emplace_back(coef(rng), p);
        FpPoly f(std::move(c), Fp(1, p));
        if (!nonzero || !f.is_zero())
            return f;
    }
}

inline QPoly random_q_poly(std::mt19937_64& rng, int max_degree, long bound, bool nonzero = true)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-bound, bound);
    for (;;) {
        std::vector<Rational> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i)
            c.emplace_back(coef(rng));
        QPoly f(std::move(c), Rational(1));
        if (!nonzero || !f.is_zero())
            return f;
    }
}

inline FpRatFunc random_fp_ratfunc(std::mt19937_64& rng, std::uint64_t p, int max_degree)
{
    return FpRatFunc(random_fp_poly(rng, p, max_degree), random_fp_poly(rng, p, max_degree));
}

inline QRatFunc random_q_ratfunc(std::mt19937_64& rng, int max_degree, long bound)
{
    return QRatFunc(random_q_poly(rng, max_degree, bound), random_q_poly(rng, max_degree, bound));
}


/// Truncated series with `length` known coefficients from a random start.
inline LaurentSeries<Rational> random_laurent(std::mt19937_64& rng, long min_start, long max_start, long length,
                                              long bound)
{
    std::uniform_int_distribution<long> start(min_start, max_start), coef(-bound, bound);
    long s = start(rng);
    std::vector<Rational> c;
    for (long i = 0; i < length; ++i)
        c.emplace_back(coef(rng));
    if (sgn(c.front()) == 0)
        c.front() = 1;
    return LaurentSeries<Rational>(s, std::move(c), s + length, Rational(1));
}

}  // namespace numfun::gen

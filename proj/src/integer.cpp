#include "numfun/integer.hpp"

#include <algorithm>
#include <map>

namespace numfun {

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer pow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (sgn(base) == 0)
            throw ZeroInputError("negative power of zero");
        Rational inv = 1 / base;
        return pow(inv, -exp);
    }
    Rational r(pow(Integer(base.get_num()), static_cast<unsigned long>(exp)),
               pow(Integer(base.get_den()), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

Integer abs(const Integer& a)
{
    Integer r = a;
    mpz_abs(r.get_mpz_t(), r.get_mpz_t());
    return r;
}

Rational abs(const Rational& a)
{
    Rational r = a;
    mpq_abs(r.get_mpq_t(), r.get_mpq_t());
    return r;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0)
        throw ZeroInputError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long valuation(const Integer& n, const Integer& p)
{
    if (sgn(n) == 0)
        throw ZeroInputError("valuation of zero is undefined");
    if (p < 2)
        throw NotPrimeError("valuation base must be >= 2");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& x, const Integer& p)
{
    if (sgn(x) == 0)
        throw ZeroInputError("valuation of zero is undefined");
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Integer IntegerFactorization::product() const
{
    Integer r = sign;
    for (const auto& [p, e] : factors)
        r *= pow(p, e);
    return r;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

Integer rho_split(const Integer& n)
{
    // Brent's cycle detection with batched gcds.
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto step = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = q * abs(Integer(x - y));
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_cofactor(const Integer& n, std::map<Integer, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = rho_split(n);
    factor_cofactor(d, out);
    factor_cofactor(Integer(n / d), out);
}

}  // namespace

IntegerFactorization factor_integer(const Integer& n)
{
    if (sgn(n) == 0)
        throw ZeroInputError("cannot factor zero");
    IntegerFactorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > m)
            break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            found[Integer(p)] = e;
        }
    }
    factor_cofactor(m, found);
    for (auto& [p, e] : found)
        result.factors.emplace_back(p, e);
    return result;
}

std::vector<Integer> prime_divisors(const Integer& n)
{
    std::vector<Integer> out;
    for (const auto& [p, e] : factor_integer(n).factors)
        out.push_back(p);
    return out;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + text);
    }
}

}  // namespace numfun

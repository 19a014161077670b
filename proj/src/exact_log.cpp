#include "numfun/exact_log.hpp"

#include <cmath>
#include <sstream>

namespace numfun {

ExactLog::ExactLog(const Rational& arg) : arg_(arg)
{
    if (sgn(arg_) <= 0)
        throw Error("ExactLog argument must be positive, got " + arg_.get_str());
}

ExactLog ExactLog::of_prime_power(const Integer& p, long exponent)
{
    return ExactLog(pow(Rational(p), exponent));
}

ExactLog ExactLog::times(long k) const { return ExactLog(pow(arg_, k)); }

double log_abs(const Integer& n)
{
    if (sgn(n) == 0)
        throw ZeroInputError("log of zero");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& q) { return log_abs(Integer(q.get_num())) - log_abs(Integer(q.get_den())); }

double ExactLog::value() const { return log_abs(arg_); }

std::string ExactLog::to_string() const
{
    if (arg_ == 1)
        return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Integer& p, long e) {
        bool negative = e < 0;
        long m = negative ? -e : e;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (m != 1)
            out << m << " * ";
        out << "log(" << p.get_str() << ")";
    };
    auto num = factor_integer(Integer(arg_.get_num()));
    auto den = factor_integer(Integer(arg_.get_den()));
    // Merge in increasing prime order.
    std::size_t i = 0, j = 0;
    while (i < num.factors.size() || j < den.factors.size()) {
        if (j == den.factors.size() || (i < num.factors.size() && num.factors[i].first < den.factors[j].first)) {
            emit(num.factors[i].first, static_cast<long>(num.factors[i].second));
            ++i;
        } else {
            emit(den.factors[j].first, -static_cast<long>(den.factors[j].second));
            ++j;
        }
    }
    return out.str();
}

}  // namespace numfun

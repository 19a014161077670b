#pragma once

#include <string>

#include "numfun/integer.hpp"

namespace numfun {

/// The real number log(arg) carried as the exact positive rational arg.
/// Sums of logs are products of arguments, so identities such as
/// sum_p v_p(f) log p = log|f| become exact rational equalities.
class ExactLog {
public:
    ExactLog() : arg_(1) {}
    explicit ExactLog(const Rational& arg);
    static ExactLog of_prime_power(const Integer& p, long exponent);

    const Rational& arg() const { return arg_; }
    bool is_zero() const { return arg_ == 1; }

    ExactLog operator+(const ExactLog& o) const { return ExactLog(Rational(arg_ * o.arg_)); }
    ExactLog operator-(const ExactLog& o) const { return ExactLog(Rational(arg_ / o.arg_)); }
    ExactLog operator-() const { return ExactLog(Rational(1 / arg_)); }
    ExactLog& operator+=(const ExactLog& o) { return *this = *this + o; }
    ExactLog times(long k) const;

    bool operator==(const ExactLog& o) const { return arg_ == o.arg_; }
    bool operator!=(const ExactLog& o) const { return !(*this == o); }

    /// Floating value; accurate for arguments of any size.
    double value() const;

    /// Sum of prime logs, e.g. "2 * log(3)" or "log(2) - log(5)"; "0" for log 1.
    std::string to_string() const;

private:
    Rational arg_;
};

/// Natural log of a positive integer of any size.
double log_abs(const Integer& n);
double log_abs(const Rational& q);

}  // namespace numfun

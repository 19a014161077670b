#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "numfun/rational_function.hpp"

namespace numfun {

class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Truncated Laurent series sum_{i >= start} a_i u^i over a field K.
/// Coefficients with index < known_until are determined; beyond that the
/// series is unknown. A series built from a polynomial is exact
/// (known_until == kExact).
template <class K>
class LaurentSeries {
public:
    static constexpr long kExact = LONG_MAX;

    explicit LaurentSeries(K one) : one_(std::move(one)) {}
    LaurentSeries(long start, std::vector<K> coeffs, long known_until, K one)
        : start_(start), coeffs_(std::move(coeffs)), known_until_(known_until), one_(std::move(one))
    {
        normalize();
    }

    /// c u^k, exact.
    static LaurentSeries monomial(const K& c, long k) { return LaurentSeries(k, {c}, kExact, one_like(c)); }

    long start() const { return start_; }
    long known_until() const { return known_until_; }
    bool is_exact() const { return known_until_ == kExact; }
    /// No nonzero coefficient is known; for inexact series this is not a proof of zero.
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<K>& coefficients() const { return coeffs_; }
    const K& one() const { return one_; }

    /// Number of known coefficients counted from start.
    long precision() const { return is_exact() ? kExact : known_until_ - start_; }

    K coefficient(long i) const
    {
        if (i >= known_until_)
            throw PrecisionError("coefficient of u^" + std::to_string(i) + " is beyond the known precision " +
                                 std::to_string(known_until_));
        if (i < start_ || i - start_ >= static_cast<long>(coeffs_.size()))
            return zero_like(one_);
        return coeffs_[static_cast<std::size_t>(i - start_)];
    }

    /// Coefficient of u^{-1}.
    K residue() const { return coefficient(-1); }

    /// Valuation; throws when no nonzero coefficient is known.
    long order() const
    {
        if (coeffs_.empty())
            throw PrecisionError("order of a series with no known nonzero coefficient");
        return start_;
    }

    LaurentSeries operator+(const LaurentSeries& o) const
    {
        long known = std::min(known_until_, o.known_until_);
        if (coeffs_.empty() && o.coeffs_.empty())
            return LaurentSeries(0, {}, known, one_);
        long lo = std::min(coeffs_.empty() ? o.start_ : start_, o.coeffs_.empty() ? start_ : o.start_);
        long hi = std::max(end_index(), o.end_index());
        if (known != kExact)
            hi = std::min(hi, known);
        std::vector<K> v;
        for (long i = lo; i < hi; ++i)
            v.push_back(K(raw(i) + o.raw(i)));
        return LaurentSeries(lo, std::move(v), known, one_);
    }

    LaurentSeries operator-() const
    {
        std::vector<K> v;
        for (const auto& c : coeffs_)
            v.push_back(K(-c));
        return LaurentSeries(start_, std::move(v), known_until_, one_);
    }

    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

    LaurentSeries operator*(const LaurentSeries& o) const
    {
        if (coeffs_.empty() && o.coeffs_.empty())
            return LaurentSeries(0, {}, std::min(known_until_, o.known_until_), one_);
        // a_i b_j with i + j = k is needed for every i >= start(a), j >= start(b).
        long known = kExact;
        if (!o.is_exact())
            known = std::min(known, start_ + o.known_until_);
        if (!is_exact())
            known = std::min(known, o.start_ + known_until_);
        long lo = start_ + o.start_;
        long hi = end_index() + o.end_index() - 1;
        if (known != kExact)
            hi = std::min(hi, known);
        std::vector<K> v(static_cast<std::size_t>(std::max(0L, hi - lo)), zero_like(one_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                long idx = start_ + static_cast<long>(i) + o.start_ + static_cast<long>(j);
                if (idx >= hi)
                    break;
                auto& slot = v[static_cast<std::size_t>(idx - lo)];
                slot = K(slot + coeffs_[i] * o.coeffs_[j]);
            }
        return LaurentSeries(lo, std::move(v), known, one_);
    }

    /// Formal derivative d/du.
    LaurentSeries derivative() const
    {
        std::vector<K> v;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            v.push_back(K(coeffs_[i] * embed(one_, start_ + static_cast<long>(i))));
        long known = is_exact() ? kExact : known_until_ - 1;
        return LaurentSeries(start_ - 1, std::move(v), known, one_);
    }

    /// Multiplicative inverse to the same relative precision.
    LaurentSeries inverse_series() const
    {
        if (coeffs_.empty())
            throw PrecisionError("cannot invert a series with no known nonzero coefficient");
        long n = precision();
        if (n == kExact)
            throw PrecisionError("inverse of an exact series needs an explicit precision");
        return inverse_series(n);
    }

    /// Inverse with n coefficients (relative precision n).
    LaurentSeries inverse_series(long n) const
    {
        if (coeffs_.empty())
            throw ZeroInputError("inverse of a zero series");
        if (!is_exact())
            n = std::min(n, precision());
        K inv0 = inverse(coeffs_[0]);
        std::vector<K> b(static_cast<std::size_t>(n), zero_like(one_));
        for (long k = 0; k < n; ++k) {
            K acc = k == 0 ? one_ : zero_like(one_);
            for (long j = 1; j <= k && j < static_cast<long>(coeffs_.size()); ++j)
                acc = K(acc - coeffs_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)]);
            b[static_cast<std::size_t>(k)] = K(acc * inv0);
        }
        return LaurentSeries(-start_, std::move(b), -start_ + n, one_);
    }

    /// Drops coefficients at index >= bound, lowering known_until.
    LaurentSeries truncated(long bound) const
    {
        std::vector<K> v;
        for (std::size_t i = 0; i < coeffs_.size() && start_ + static_cast<long>(i) < bound; ++i)
            v.push_back(coeffs_[i]);
        return LaurentSeries(start_, std::move(v), std::min(bound, known_until_), one_);
    }

private:
    long end_index() const { return start_ + static_cast<long>(coeffs_.size()); }

    K raw(long i) const
    {
        if (i < start_ || i >= end_index())
            return zero_like(one_);
        return coeffs_[static_cast<std::size_t>(i - start_)];
    }

    void normalize()
    {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && is_zero_coeff(coeffs_[lead]))
            ++lead;
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            start_ += static_cast<long>(lead);
        }
        if (known_until_ != kExact && end_index() > known_until_)
            coeffs_.erase(coeffs_.begin() + std::max(0L, known_until_ - start_), coeffs_.end());
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.back()))
            coeffs_.pop_back();
        if (coeffs_.empty() && known_until_ != kExact)
            start_ = known_until_;
    }

    static bool is_zero_coeff(const K& c) { return detail::coeff_is_zero(c); }

    long start_ = 0;
    std::vector<K> coeffs_;
    long known_until_ = kExact;
    K one_;
};

/// Exact series of a polynomial in u.
template <class K>
LaurentSeries<K> series_of(const Polynomial<K>& f)
{
    return LaurentSeries<K>(0, f.coefficients(), LaurentSeries<K>::kExact, f.one());
}

/// Expansion of num(u)/den(u) at u = 0 with n coefficients from the leading term.
template <class K>
LaurentSeries<K> series_of(const Polynomial<K>& num, const Polynomial<K>& den, long n)
{
    if (den.is_zero())
        throw ZeroInputError("zero denominator");
    if (num.is_zero())
        return LaurentSeries<K>(num.one());
    auto d = series_of(den);
    auto inv = d.inverse_series(n);
    auto r = series_of(num) * inv;
    return r.truncated(r.start() + n);
}

/// Coefficients of f(x + u) as a polynomial in u, for x in an algebra V over
/// the coefficient field of f. `lift` embeds coefficients into V.
template <class V, class K, class Lift>
Polynomial<V> taylor_shift(const Polynomial<K>& f, const V& x, const V& one, Lift lift)
{
    Polynomial<V> shifted(one);
    Polynomial<V> base(std::vector<V>{x, one}, one);
    for (int i = f.degree(); i >= 0; --i)
        shifted = shifted * base + Polynomial<V>::constant(lift(f.coeff(i)));
    return shifted;
}

/// Expansion of F in powers of u = t - t0, n coefficients from the leading one.
template <class K>
LaurentSeries<K> series_at(const RationalFunction<K>& F, const K& t0, long n)
{
    const K& one = F.one();
    auto id = [](const K& c) { return c; };
    return series_of(taylor_shift(F.num(), t0, one, id), taylor_shift(F.den(), t0, one, id), n);
}

/// Expansion of F in powers of u = 1/t.
template <class K>
LaurentSeries<K> series_at_infinity(const RationalFunction<K>& F, long n)
{
    if (F.is_zero())
        return LaurentSeries<K>(F.one());
    // F(1/u) = u^(deg den - deg num) rev(num)(u) / rev(den)(u)
    auto s = series_of(F.num().reversed(), F.den().reversed(), n);
    long shift = F.den().degree() - F.num().degree();
    return s * LaurentSeries<K>::monomial(F.one(), shift);
}

}  // namespace numfun

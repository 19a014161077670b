#pragma once

#include <algorithm>
#include <sstream>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "numfun/field.hpp"

namespace numfun {

/// Dense univariate polynomial over a field K, coefficients in ascending
/// degree. Trailing zeros are never stored; the zero polynomial has
/// degree -1. Every polynomial carries the unit of its coefficient field
/// so that F_p polynomials know their modulus even when zero.
template <class K>
class Polynomial {
public:
    explicit Polynomial(K one) : one_(std::move(one)) {}
    Polynomial(std::vector<K> coeffs, K one) : c_(std::move(coeffs)), one_(std::move(one)) { trim(); }

    static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}, one_like(c)); }
    static Polynomial monomial(const K& c, int degree)
    {
        std::vector<K> v(static_cast<std::size_t>(degree) + 1, zero_like(c));
        v.back() = c;
        return Polynomial(std::move(v), one_like(c));
    }
    static Polynomial variable(const K& one) { return monomial(one, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return zero_like(one_);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coefficients() const { return c_; }
    const K& one() const { return one_; }
    K zero() const { return zero_like(one_); }
    K leading() const { return c_.empty() ? zero() : c_.back(); }

    Polynomial monic() const
    {
        if (is_zero())
            return *this;
        return scaled(inverse(leading()));
    }

    Polynomial scaled(const K& s) const
    {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& a : c_)
            v.push_back(K(a * s));
        return Polynomial(std::move(v), one_);
    }

    Polynomial operator-() const { return scaled(K(-one_)); }

    Polynomial operator+(const Polynomial& o) const
    {
        std::vector<K> v(std::max(c_.size(), o.c_.size()), zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            v[i] = K(v[i] + o.c_[i]);
        return Polynomial(std::move(v), one_);
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const
    {
        if (is_zero() || o.is_zero())
            return Polynomial(one_);
        std::vector<K> v(c_.size() + o.c_.size() - 1, zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::coeff_is_zero(c_[i]))
                continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = K(v[i + j] + c_[i] * o.c_[j]);
        }
        return Polynomial(std::move(v), one_);
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Euclidean division; throws when dividing by zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero())
            throw ZeroInputError("polynomial division by zero");
        if (degree() < d.degree())
            return {Polynomial(one_), *this};
        std::vector<K> rem = c_;
        std::vector<K> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, zero());
        K inv_lead = inverse(d.leading());
        for (int i = degree(); i >= d.degree(); --i) {
            K q = K(rem[static_cast<std::size_t>(i)] * inv_lead);
            if (detail::coeff_is_zero(q))
                continue;
            int shift = i - d.degree();
            quo[static_cast<std::size_t>(shift)] = q;
            for (int j = 0; j <= d.degree(); ++j) {
                auto idx = static_cast<std::size_t>(shift + j);
                rem[idx] = K(rem[idx] - q * d.c_[static_cast<std::size_t>(j)]);
            }
        }
        rem.resize(static_cast<std::size_t>(d.degree()));
        return {Polynomial(std::move(quo), one_), Polynomial(std::move(rem), one_)};
    }

    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    K evaluate(const K& x) const
    {
        K r = zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = K(r * x + *it);
        return r;
    }

    /// Horner evaluation in an algebra V over K; `lift` embeds K into V.
    template <class V, class Lift>
    V evaluate_in(const V& x, const V& zero_v, Lift lift) const
    {
        V r = zero_v;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + lift(*it);
        return r;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return Polynomial(one_);
        std::vector<K> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(K(c_[i] * embed(one_, static_cast<long>(i))));
        return Polynomial(std::move(v), one_);
    }

    Polynomial compose(const Polynomial& inner) const
    {
        Polynomial r(one_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * inner + constant(*it);
        return r;
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial base = *this, r = constant(one_);
        while (e) {
            if (e & 1u)
                r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Coefficients in reverse order: t^deg f(1/t).
    Polynomial reversed() const
    {
        std::vector<K> v(c_.rbegin(), c_.rend());
        return Polynomial(std::move(v), one_);
    }

private:
    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<K> c_;
    K one_;
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

inline QPoly qpoly(std::initializer_list<long> ascending)
{
    std::vector<Rational> v;
    for (long a : ascending)
        v.emplace_back(a);
    return QPoly(std::move(v), Rational(1));
}

inline FpPoly fppoly(std::initializer_list<long> ascending, std::uint64_t p)
{
    std::vector<Fp> v;
    Fp one(1, p);
    for (long a : ascending)
        v.push_back(embed(one, a));
    return FpPoly(std::move(v), one);
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b)
{
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> poly_xgcd(const Polynomial<K>& a, const Polynomial<K>& b)
{
    using P = Polynomial<K>;
    const K& one = a.one();
    P r0 = a, r1 = b;
    P s0 = P::constant(one), s1(one), t0(one), t1 = P::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        P s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        P t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    K inv = inverse(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Determinant of a square matrix over K by Gaussian elimination.
template <class K>
K determinant(std::vector<std::vector<K>> m, const K& one)
{
    const std::size_t n = m.size();
    K det = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m[pivot][col]))
            ++pivot;
        if (pivot == n)
            return zero_like(one);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = K(-det);
        }
        det = K(det * m[col][col]);
        K inv = inverse(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m[r][col]))
                continue;
            K factor = K(m[r][col] * inv);
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = K(m[r][c] - factor * m[col][c]);
        }
    }
    return det;
}

/// Sylvester matrix with the deg(g) rows of f first, coefficients in
/// descending degree. With this order Res(f, g) = lc(f)^deg(g) * prod g(roots of f).
template <class K>
std::vector<std::vector<K>> sylvester_matrix(const Polynomial<K>& f, const Polynomial<K>& g)
{
    const int m = f.degree(), n = g.degree();
    const auto size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<K>> s(size, std::vector<K>(size, f.zero()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeff(n - i);
    return s;
}

template <class K>
K resultant(const Polynomial<K>& f, const Polynomial<K>& g)
{
    if (f.is_zero() || g.is_zero())
        throw ZeroInputError("resultant of a zero polynomial");
    return determinant(sylvester_matrix(f, g), f.one());
}

template <class K>
std::string to_string(const Polynomial<K>& f, const std::string& var = "t")
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        K c = f.coeff(i);
        if (is_zero(c))
            continue;
        std::string s = to_string(c);
        bool negative = !s.empty() && s[0] == '-';
        if (negative)
            s.erase(0, 1);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        bool unit = (s == "1");
        if (i == 0)
            out << s;
        else {
            if (!unit)
                out << (s.find('/') != std::string::npos ? "(" + s + ")" : s) << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace numfun

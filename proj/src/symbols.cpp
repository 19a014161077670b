#include "numfun/symbols.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "numfun/number_field.hpp"
#include "numfun/poly_factor.hpp"

namespace numfun {

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1)
            r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

// Euler's criterion on a residue already reduced into [0, p).
int legendre_small(long a, long p)
{
    if (a % p == 0)
        return 0;
    auto r = powmod_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(p - 1) / 2,
                        static_cast<std::uint64_t>(p));
    return r == 1 ? 1 : -1;
}

long small_prime(const Integer& p)
{
    if (!fits_int64(p) || p > 3037000499L)
        throw Error("prime " + to_string(p) + " is too large for the local symbol");
    return p.get_si();
}

long mod_positive(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

}  // namespace

int legendre(const Integer& a, const Integer& p)
{
    if (p == 2 || !is_prime(p))
        throw NotPrimeError("Legendre symbol needs an odd prime, got " + to_string(p));
    Integer r = a % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    Integer e = (p - 1) / 2, out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out == 1 ? 1 : -1;
}

SquareClass square_class(const Rational& a, long p)
{
    if (sgn(a) == 0)
        throw ZeroInputError("square class of zero");
    Integer P(p);
    Integer num = a.get_num(), den = a.get_den();
    SquareClass c;
    c.valuation = valuation(a, P);
    // num/den and num*den differ by a square
    Integer u = num * den;
    long strip = c.valuation >= 0 ? c.valuation : -c.valuation;
    for (long i = 0; i < strip; ++i)
        u /= P;
    long m = p == 2 ? 8 : p;
    c.unit = mod_positive(Integer(u % m).get_si(), m);
    return c;
}

int hilbert_closed_form(long p, const SquareClass& a, const SquareClass& b)
{
    int al = parity(a.valuation), be = parity(b.valuation);
    if (p == 2) {
        auto eps = [](long u) { return static_cast<int>(((u - 1) / 2) & 1); };
        auto omega = [](long u) { return static_cast<int>(((u * u - 1) / 8) & 1); };
        int e = eps(a.unit) * eps(b.unit) + al * omega(b.unit) + be * omega(a.unit);
        return e % 2 ? -1 : 1;
    }
    int s = (al && be && parity((p - 1) / 2)) ? -1 : 1;
    if (be)
        s *= legendre_small(a.unit, p);
    if (al)
        s *= legendre_small(b.unit, p);
    return s;
}

int hilbert_quadratic(const Rational& a, const Rational& b, const Place& v)
{
    if (sgn(a) == 0 || sgn(b) == 0)
        throw ZeroInputError("Hilbert symbol of zero");
    if (std::holds_alternative<ArchimedeanQ>(v))
        return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    const auto* fp = std::get_if<FinitePrimeQ>(&v);
    if (!fp)
        throw WorldMismatchError("Hilbert symbol needs a place of Q, got " + describe(v));
    long p = small_prime(fp->p);
    return hilbert_closed_form(p, square_class(a, p), square_class(b, p));
}

namespace {

// Search for y in Z_p with A + B y^2 a nonzero square or zero, one p-adic digit
// at a time. A branch stops as soon as the leading digits of w = A + B y^2
// decide squareness: valuation even and unit part a square modulo p (mod 8 at 2),
// both read off directly from residues found by brute force.
class ConicSearch {
public:
    ConicSearch(long p, __int128 A, __int128 B) : p_(p), A_(A), B_(B)
    {
        r_ = p == 2 ? 3 : 1;
        pr_ = p == 2 ? 8 : p;
        max_level_ = p == 2 ? 16 : 8;
        squares_.assign(static_cast<std::size_t>(pr_), false);
        for (long z = 1; z < pr_; ++z)
            if (z % p)
                squares_[static_cast<std::size_t>(z * z % pr_)] = true;
    }

    // x = 1, y free
    bool with_x_unit() { return search(0, 1, 0, [this](__int128 y) { return A_ + B_ * y * y; }); }
    // y = 1, x = p s
    bool with_y_unit()
    {
        return search(0, 1, 0, [this](__int128 s) {
            __int128 x = s * p_;
            return A_ * x * x + B_;
        });
    }

private:
    // 0: not a square, 1: square, 2: undetermined at this level
    int classify(__int128 w, long level) const
    {
        if (w == 0)
            return 1;
        long nu = 0;
        while (w % p_ == 0) {
            w /= p_;
            ++nu;
        }
        if (nu + r_ > level)
            return 2;
        if (nu % 2)
            return 0;
        long u = static_cast<long>(w % pr_);
        if (u < 0)
            u += pr_;
        return squares_[static_cast<std::size_t>(u)] ? 1 : 0;
    }

    // prefix is the variable modulo p^level (scale = p^level).
    template <class W>
    bool search(__int128 prefix, __int128 scale, long level, W w)
    {
        if (level > 0) {
            int c = classify(w(prefix), level);
            if (c == 1)
                return true;
            if (c == 0)
                return false;
            if (level == max_level_)
                return false;
        }
        for (long d = 0; d < p_; ++d)
            if (search(prefix + d * scale, scale * p_, level + 1, w))
                return true;
        return false;
    }

    long p_, r_, pr_, max_level_;
    __int128 A_, B_;
    std::vector<bool> squares_;
};

}  // namespace

int hilbert_oracle_classes(long p, const SquareClass& a, const SquareClass& b)
{
    static std::mutex mu;
    static std::map<std::tuple<long, int, long, int, long>, int> memo;
    auto key = std::make_tuple(p, parity(a.valuation), a.unit, parity(b.valuation), b.unit);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    // Representatives p^(v mod 2) * unit of the two square classes.
    __int128 A = (parity(a.valuation) ? p : 1) * static_cast<__int128>(a.unit);
    __int128 B = (parity(b.valuation) ? p : 1) * static_cast<__int128>(b.unit);
    ConicSearch search(p, A, B);
    // A primitive solution has x or y a unit; scale it to 1.
    int result = (search.with_x_unit() || search.with_y_unit()) ? 1 : -1;
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, result);
    return result;
}

int hilbert_oracle(const Rational& a, const Rational& b, const Place& v)
{
    if (sgn(a) == 0 || sgn(b) == 0)
        throw ZeroInputError("Hilbert symbol of zero");
    if (std::holds_alternative<ArchimedeanQ>(v))
        return (sgn(a) > 0 || sgn(b) > 0) ? 1 : -1;  // (1, 0, sqrt a) or (0, 1, sqrt b)
    const auto* fp = std::get_if<FinitePrimeQ>(&v);
    if (!fp)
        throw WorldMismatchError("Hilbert symbol needs a place of Q, got " + describe(v));
    long p = small_prime(fp->p);
    return hilbert_oracle_classes(p, square_class(a, p), square_class(b, p));
}

HilbertProductWitness hilbert_product_check(const Rational& a, const Rational& b)
{
    if (sgn(a) == 0 || sgn(b) == 0)
        throw ZeroInputError("Hilbert symbol of zero");
    std::vector<Integer> primes{Integer(2)};
    for (const Integer& n : {Integer(a.get_num()), Integer(a.get_den()), Integer(b.get_num()), Integer(b.get_den())})
        for (const auto& [p, e] : factor_integer(n).factors)
            primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    HilbertProductWitness w;
    int product = 1;
    auto record = [&](const std::string& name, int s) {
        w.symbols.emplace_back(name, s);
        if (s < 0)
            w.places.push_back(name);
        product *= s;
    };
    for (const auto& p : primes)
        record(p.get_str(), hilbert_quadratic(a, b, FinitePrimeQ{p}));
    record("inf", hilbert_quadratic(a, b, ArchimedeanQ{}));
    w.holds = (product == 1) && (w.places.size() % 2 == 0);
    return w;
}

GaussReciprocityWitness gauss_reciprocity_check(const Integer& a, const Integer& b)
{
    if (a == b)
        throw Error("reciprocity needs distinct primes");
    GaussReciprocityWitness w;
    w.legendre_ab = legendre(a, b);
    w.legendre_ba = legendre(b, a);
    Integer e = ((a - 1) / 2) * ((b - 1) / 2);
    w.sign = mpz_even_p(e.get_mpz_t()) ? 1 : -1;
    w.direct_holds = (w.legendre_ab * w.legendre_ba == w.sign);

    Rational qa(a), qb(b);
    w.hilbert_at_a = hilbert_quadratic(qa, qb, FinitePrimeQ{a});
    w.hilbert_at_b = hilbert_quadratic(qa, qb, FinitePrimeQ{b});
    w.hilbert_at_2 = hilbert_quadratic(qa, qb, FinitePrimeQ{Integer(2)});
    int at_inf = hilbert_quadratic(qa, qb, ArchimedeanQ{});
    // Only the places a, b, 2 remain: (a,b)_b = (a/b), (a,b)_a = (b/a), (a,b)_2 = sign.
    bool product_one = hilbert_product_check(qa, qb).holds;
    w.hilbert_holds = product_one && at_inf == 1 && w.hilbert_at_b == w.legendre_ab &&
                      w.hilbert_at_a == w.legendre_ba && w.hilbert_at_2 == w.sign;
    return w;
}

namespace {

QPoly linear_at(const Rational& t0) { return QPoly(std::vector<Rational>{Rational(-t0), Rational(1)}, Rational(1)); }

long order_at_point(const QRatFunc& h, const std::optional<Rational>& t0)
{
    if (!t0)
        return h.den().degree() - h.num().degree();
    QPoly lin = linear_at(*t0);
    return order_at(h.num(), lin) - order_at(h.den(), lin);
}

// Residue of h dt at t0 (or infinity).
Rational residue_of_form(const QRatFunc& h, const std::optional<Rational>& t0)
{
    if (h.is_zero())
        return Rational(0);
    long ord = order_at_point(h, t0);
    if (t0) {
        if (ord >= 0)
            return Rational(0);
        return series_at(h, *t0, -ord).coefficient(-1);
    }
    // dt = -u^-2 du with u = 1/t
    if (ord >= 2)
        return Rational(0);
    return Rational(-series_at_infinity(h, 2 - ord).coefficient(1));
}

}  // namespace

Rational tame_symbol(const QRatFunc& f, const QRatFunc& g, const std::optional<Rational>& t0)
{
    if (f.is_zero() || g.is_zero())
        throw ZeroInputError("tame symbol of zero");
    auto sf = t0 ? series_at(f, *t0, 1) : series_at_infinity(f, 1);
    auto sg = t0 ? series_at(g, *t0, 1) : series_at_infinity(g, 1);
    return tame_symbol(sf, sg);
}

Rational residue(const QRatFunc& f, const QRatFunc& g, const std::optional<Rational>& t0)
{
    return residue_of_form(f * g.derivative(), t0);
}

ResidueSumWitness residue_sum_check(const QRatFunc& f, const QRatFunc& g)
{
    QRatFunc h = f * g.derivative();
    ResidueSumWitness w;
    w.total = 0;
    if (!h.is_zero() && h.den().degree() > 0) {
        for (const auto& [S, mult] : factor_over_q(h.den()).factors) {
            ResidueTerm term;
            term.degree = S.degree();
            if (S.degree() == 1) {
                Rational root = -S.coeff(0) / S.coeff(1);
                term.point = "t = " + to_string(root);
                term.residue = residue_of_form(h, root);
            } else {
                term.point = to_string(S) + " = 0";
                auto mod = std::make_shared<const QPoly>(S);
                auto x = NumberFieldElement::generator(mod);
                auto one = one_like(x);
                auto lift = [&](const Rational& q) { return x.lift(q); };
                auto num = taylor_shift(h.num(), x, one, lift);
                auto den = taylor_shift(h.den(), x, one, lift);
                // the pole order at each root of S equals the multiplicity of S in den
                auto s = series_of(num, den, static_cast<long>(mult));
                term.residue = s.coefficient(-1).trace();
            }
            w.total += term.residue;
            w.terms.push_back(term);
        }
    }
    ResidueTerm inf;
    inf.point = "infinity";
    inf.residue = residue_of_form(h, std::nullopt);
    w.total += inf.residue;
    w.terms.push_back(inf);
    w.holds = (w.total == 0);
    return w;
}

}  // namespace numfun

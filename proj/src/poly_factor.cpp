#include "numfun/poly_factor.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>

namespace numfun {

namespace {

FpPoly one_poly(const Fp& one) { return FpPoly::constant(one); }

bool is_one(const FpPoly& f) { return f.degree() == 0 && f.leading() == f.one(); }

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly powmod_u64(FpPoly base, std::uint64_t e, const FpPoly& m)
{
    FpPoly r = one_poly(m.one()) % m;
    base = base % m;
    while (e) {
        if (e & 1u)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// p-th root of a polynomial whose derivative vanishes (only x^{kp} terms).
FpPoly pth_root(const FpPoly& f)
{
    const std::uint64_t p = f.one().modulus();
    std::vector<Fp> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        // a^p = a in F_p, so coefficients carry over unchanged.
        v.push_back(f.coeff(i));
    }
    return FpPoly(std::move(v), f.one());
}

FpPoly random_poly(int degree_below, const Fp& one, std::mt19937_64& rng)
{
    std::vector<Fp> v;
    std::uniform_int_distribution<std::uint64_t> dist(0, one.modulus() - 1);
    for (int i = 0; i < degree_below; ++i)
        v.emplace_back(dist(rng), one.modulus());
    return FpPoly(std::move(v), one);
}

template <class K>
bool coeff_less(const K& a, const K& b);

template <>
bool coeff_less<Fp>(const Fp& a, const Fp& b)
{
    return a.value() < b.value();
}

template <>
bool coeff_less<Rational>(const Rational& a, const Rational& b)
{
    return a < b;
}

template <class K>
bool generic_less(const Polynomial<K>& a, const Polynomial<K>& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        K x = a.coeff(i), y = b.coeff(i);
        if (coeff_less(x, y))
            return true;
        if (coeff_less(y, x))
            return false;
    }
    return false;
}

}  // namespace

bool poly_less(const FpPoly& a, const FpPoly& b) { return generic_less(a, b); }
bool poly_less(const QPoly& a, const QPoly& b) { return generic_less(a, b); }

FpPoly powmod(const FpPoly& base, const Integer& exponent, const FpPoly& modulus)
{
    FpPoly r = one_poly(modulus.one()) % modulus;
    FpPoly b = base % modulus;
    const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, modulus);
        if (mpz_tstbit(exponent.get_mpz_t(), i))
            r = mulmod(r, b, modulus);
    }
    return r;
}

FpPoly FpFactorization::product() const
{
    FpPoly r = FpPoly::constant(leading);
    for (const auto& [g, e] : factors)
        r *= g.pow(e);
    return r;
}

std::vector<std::pair<FpPoly, unsigned>> squarefree_mod_p(const FpPoly& f_in)
{
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly f = f_in.monic();
    if (f.degree() < 1)
        return out;
    const auto p = static_cast<unsigned>(std::min<std::uint64_t>(f.one().modulus(), 1u << 30));
    FpPoly c = poly_gcd(f, f.derivative());
    FpPoly w = f / c;
    unsigned i = 1;
    while (!is_one(w)) {
        FpPoly y = poly_gcd(w, c);
        FpPoly fac = w / y;
        if (!is_one(fac))
            out.emplace_back(fac, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!is_one(c)) {
        for (auto& [g, j] : squarefree_mod_p(pth_root(c)))
            out.emplace_back(g, j * p);
    }
    return out;
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree_mod_p(const FpPoly& f_in)
{
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly f = f_in.monic();
    const Fp one = f.one();
    const FpPoly x = FpPoly::variable(one);
    FpPoly h = x % f;
    unsigned d = 1;
    while (f.degree() >= 2 * static_cast<int>(d)) {
        h = powmod_u64(h, one.modulus(), f);
        FpPoly g = poly_gcd(f, h - x);
        if (!is_one(g)) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
        ++d;
    }
    if (f.degree() >= 1)
        out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

std::vector<FpPoly> equal_degree_mod_p(const FpPoly& f_in, unsigned d)
{
    FpPoly f = f_in.monic();
    if (f.degree() <= static_cast<int>(d))
        return {f};
    const Fp one = f.one();
    const std::uint64_t p = one.modulus();
    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(f.degree()) * 131 + p);
    Integer half_exp = (pow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
    for (;;) {
        FpPoly a = random_poly(f.degree(), one, rng);
        if (a.degree() < 1)
            continue;
        FpPoly b(one);
        if (p == 2) {
            // Absolute trace F_{2^d} -> F_2.
            FpPoly term = a % f;
            b = term;
            for (unsigned i = 1; i < d; ++i) {
                term = mulmod(term, term, f);
                b += term;
            }
        } else {
            b = powmod(a, half_exp, f) - one_poly(one);
        }
        FpPoly g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_mod_p(g, d);
            auto right = equal_degree_mod_p(f / g, d);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

FpFactorization factor_poly_mod_p(const FpPoly& f)
{
    if (f.is_zero())
        throw ZeroInputError("cannot factor the zero polynomial");
    FpFactorization out{f.leading(), {}};
    for (const auto& [sq, mult] : squarefree_mod_p(f))
        for (const auto& [block, d] : distinct_degree_mod_p(sq))
            for (auto& g : equal_degree_mod_p(block, d))
                out.factors.emplace_back(std::move(g), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible_mod_p(const FpPoly& f)
{
    if (f.degree() < 1)
        return false;
    auto fac = factor_poly_mod_p(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

FpPoly reduce_mod_p(const QPoly& f, const PrimeField& field)
{
    std::vector<Fp> v;
    Integer p(static_cast<unsigned long>(field.modulus()));
    for (const auto& c : f.coefficients()) {
        Integer den(c.get_den());
        if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
            throw NotIntegralError("coefficient " + c.get_str() + " is not " + p.get_str() + "-integral");
        v.push_back(field.from(Integer(c.get_num())) / field.from(den));
    }
    return FpPoly(std::move(v), field.one());
}

// ---- integer polynomials -------------------------------------------------

Rational content(const QPoly& f)
{
    if (f.is_zero())
        throw ZeroInputError("content of the zero polynomial");
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : f.coefficients()) {
        num_gcd = gcd(num_gcd, Integer(c.get_num()));
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
    Rational r = make_rational(num_gcd, den_lcm);
    if (sgn(f.leading()) < 0)
        r = -r;
    return r;
}

QPoly primitive_part(const QPoly& f) { return f.scaled(inverse(content(f))); }

bool has_integer_coefficients(const QPoly& f)
{
    return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Integer> integer_coefficients(const QPoly& f)
{
    std::vector<Integer> v;
    for (const auto& c : f.coefficients()) {
        if (c.get_den() != 1)
            throw NotIntegralError("polynomial has non-integer coefficient " + c.get_str());
        v.emplace_back(c.get_num());
    }
    return v;
}

QPoly QFactorization::product() const
{
    QPoly r = QPoly::constant(unit);
    for (const auto& [g, e] : factors)
        r *= g.pow(e);
    return r;
}

std::vector<std::pair<QPoly, unsigned>> squarefree_over_q(const QPoly& f_in)
{
    std::vector<std::pair<QPoly, unsigned>> out;
    QPoly f = f_in.monic();
    if (f.degree() < 1)
        return out;
    QPoly df = f.derivative();
    QPoly a = poly_gcd(f, df);
    QPoly b = f / a;
    QPoly c = df / a;
    QPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() >= 1) {
        a = poly_gcd(b, d);
        if (a.degree() >= 1)
            out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Integer polynomials mod m as coefficient vectors (ascending).
using ZVec = std::vector<Integer>;

Integer mod_sym(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m)
        r -= m;
    return r;
}

Integer mod_pos(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void ztrim(ZVec& v)
{
    while (!v.empty() && sgn(v.back()) == 0)
        v.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b, const Integer& m)
{
    if (a.empty() || b.empty())
        return {};
    ZVec r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& c : r)
        c = mod_pos(c, m);
    ztrim(r);
    return r;
}

ZVec zsub(const ZVec& a, const ZVec& b, const Integer& m)
{
    ZVec r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    for (auto& c : r)
        c = mod_pos(c, m);
    ztrim(r);
    return r;
}

ZVec zadd(const ZVec& a, const ZVec& b, const Integer& m)
{
    ZVec r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    for (auto& c : r)
        c = mod_pos(c, m);
    ztrim(r);
    return r;
}

ZVec zscale(const ZVec& a, const Integer& s, const Integer& m)
{
    ZVec r;
    for (const auto& c : a)
        r.push_back(mod_pos(c * s, m));
    ztrim(r);
    return r;
}

FpPoly to_fp(const ZVec& a, const PrimeField& field)
{
    std::vector<Fp> v;
    for (const auto& c : a)
        v.push_back(field.from(c));
    return FpPoly(std::move(v), field.one());
}

ZVec from_fp(const FpPoly& f)
{
    ZVec v;
    for (const auto& c : f.coefficients())
        v.emplace_back(static_cast<unsigned long>(c.value()));
    return v;
}

/// Lifts f = g h (mod p) with g monic to f = G H (mod p^k).
std::pair<ZVec, ZVec> hensel_lift(const ZVec& f, ZVec g, ZVec h, const PrimeField& field, unsigned k)
{
    const Integer p(static_cast<unsigned long>(field.modulus()));
    auto [one_check, s, t] = poly_xgcd(to_fp(g, field), to_fp(h, field));
    (void)one_check;
    Integer pk = p;
    for (unsigned step = 1; step < k; ++step) {
        Integer next = pk * p;
        ZVec e = zsub(f, zmul(g, h, next), next);
        for (auto& c : e)
            c /= pk;  // exact: f == g h mod p^step
        FpPoly ep = to_fp(e, field);
        auto [q, dg] = (ep * t).divmod(to_fp(g, field));
        FpPoly dh = ep * s + q * to_fp(h, field);
        g = zadd(g, zscale(from_fp(dg), pk, next), next);
        h = zadd(h, zscale(from_fp(dh), pk, next), next);
        pk = next;
    }
    return {g, h};
}

QPoly zvec_to_qpoly(const ZVec& v)
{
    std::vector<Rational> c;
    for (const auto& a : v)
        c.emplace_back(a);
    return QPoly(std::move(c), Rational(1));
}

/// Factors a primitive squarefree integer polynomial of degree >= 2.
std::vector<QPoly> zassenhaus(const QPoly& f)
{
    const ZVec fz = integer_coefficients(f);
    const int n = f.degree();
    const Integer lc = fz.back();

    // Choose p with p ∤ lc and f squarefree mod p.
    unsigned long pr = 3;
    std::unique_ptr<PrimeField> field;
    for (;; ++pr) {
        if (!is_prime(Integer(pr)) || mpz_divisible_ui_p(lc.get_mpz_t(), pr))
            continue;
        PrimeField candidate(pr);
        FpPoly fp = to_fp(fz, candidate);
        if (poly_gcd(fp, fp.derivative()).degree() == 0) {
            field = std::make_unique<PrimeField>(candidate);
            break;
        }
    }
    FpFactorization modp = factor_poly_mod_p(to_fp(fz, *field));
    if (modp.factors.size() == 1)
        return {f};

    // Mignotte-type bound on coefficients of lc * (any factor).
    Integer maxc = 0;
    for (const auto& c : fz)
        maxc = std::max(maxc, abs(c));
    Integer bound = abs(lc) * pow(Integer(2), static_cast<unsigned long>(n)) * (n + 1) * maxc;
    const Integer p(pr);
    unsigned k = 1;
    Integer pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }

    // Sequential two-factor lifting.
    std::vector<ZVec> lifted;
    ZVec rest = fz;
    for (auto& c : rest)
        c = mod_pos(c, pk);
    std::vector<FpPoly> remaining;
    for (const auto& [g, e] : modp.factors)
        remaining.push_back(g);
    for (std::size_t i = 0; i + 1 < remaining.size(); ++i) {
        FpPoly hmod = FpPoly::constant(field->from(lc));
        for (std::size_t j = i + 1; j < remaining.size(); ++j)
            hmod *= remaining[j];
        auto [G, H] = hensel_lift(rest, from_fp(remaining[i]), from_fp(hmod), *field, k);
        lifted.push_back(G);
        rest = H;
    }
    {
        Integer lc_inv;
        mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
        lifted.push_back(zscale(rest, lc_inv, pk));
    }

    // Recombination over subsets of increasing size.
    std::vector<QPoly> found;
    QPoly current = f;
    std::vector<ZVec> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool progressed = false;
        std::vector<std::size_t> idx(size);
        std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
            if (depth == size) {
                Integer clc = integer_coefficients(current).back();
                ZVec cand{mod_pos(clc, pk)};
                for (auto i : idx)
                    cand = zmul(cand, pool[i], pk);
                for (auto& c : cand)
                    c = mod_sym(c, pk);
                ztrim(cand);
                QPoly g = primitive_part(zvec_to_qpoly(cand));
                auto [q, r] = current.divmod(g);
                if (!r.is_zero() || !has_integer_coefficients(q))
                    return false;
                found.push_back(g);
                current = q;
                std::vector<ZVec> next;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next.push_back(pool[i]);
                pool = std::move(next);
                return true;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                idx[depth] = i;
                if (search(i + 1, depth + 1))
                    return true;
            }
            return false;
        };
        while (2 * size <= pool.size() && search(0, 0))
            progressed = true;
        (void)progressed;
        ++size;
    }
    found.push_back(primitive_part(current));
    return found;
}

}  // namespace

QFactorization factor_over_q(const QPoly& f)
{
    if (f.is_zero())
        throw ZeroInputError("cannot factor the zero polynomial");
    QFactorization out{content(f), {}};
    for (const auto& [sq, mult] : squarefree_over_q(f)) {
        QPoly prim = primitive_part(sq);
        std::vector<QPoly> parts;
        if (prim.degree() == 1)
            parts.push_back(prim);
        else
            parts = zassenhaus(prim);
        for (auto& g : parts)
            out.factors.emplace_back(std::move(g), mult);
    }
    // Recompute the unit so that unit * prod = f exactly.
    QPoly prod = QPoly::constant(Rational(1));
    for (const auto& [g, e] : out.factors)
        prod *= g.pow(e);
    out.unit = Rational(f.leading() / prod.leading());
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible_over_q(const QPoly& f)
{
    if (f.degree() < 1)
        return false;
    auto fac = factor_over_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace numfun

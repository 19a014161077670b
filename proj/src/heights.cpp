#include "numfun/heights.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <sstream>

#include "numfun/places.hpp"
#include "numfun/polynomial.hpp"

namespace numfun {

// ---- projective points ----------------------------------------------------

ProjectivePoint::ProjectivePoint(std::vector<Integer> coords) : x_(std::move(coords))
{
    if (x_.size() < 2)
        throw Error("a projective point needs at least two coordinates");
    Integer g(0);
    for (const auto& c : x_)
        g = gcd(g, c);
    if (g == 0)
        throw ZeroInputError("all coordinates are zero");
    auto first = std::find_if(x_.begin(), x_.end(), [](const Integer& c) { return c != 0; });
    if (*first < 0)
        g = -g;
    for (auto& c : x_)
        c /= g;
}

ProjectivePoint ProjectivePoint::from_rationals(const std::vector<Rational>& coords)
{
    Integer l(1);
    for (const auto& q : coords)
        l = lcm(l, Integer(q.get_den()));
    std::vector<Integer> v;
    for (const auto& q : coords)
        v.emplace_back(Integer(q.get_num()) * (l / Integer(q.get_den())));
    return ProjectivePoint(std::move(v));
}

Integer ProjectivePoint::max_abs() const
{
    Integer m(0);
    for (const auto& c : x_)
        m = std::max(m, Integer(abs(c)));
    return m;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const
{
    Integer a = max_abs(), b = o.max_abs();
    if (a != b)
        return a < b;
    return x_ < o.x_;
}

std::string to_string(const ProjectivePoint& P)
{
    std::string s = "(";
    for (std::size_t i = 0; i < P.coords().size(); ++i)
        s += (i ? ":" : "") + P.coords()[i].get_str();
    return s + ")";
}

HeightValue naive_height(const ProjectivePoint& P)
{
    HeightValue h;
    h.exact = ExactLog(Rational(P.max_abs()));
    h.approx = h.exact->value();
    return h;
}

MultiPlaceHeight multi_place_height(const std::vector<Rational>& coords)
{
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return sgn(q) == 0; }))
        throw ZeroInputError("all coordinates are zero");
    std::vector<Integer> primes;
    for (const auto& q : coords) {
        if (sgn(q) == 0)
            continue;
        for (const Integer& n : {Integer(q.get_num()), Integer(q.get_den())})
            for (const auto& [p, e] : factor_integer(n).factors)
                primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    MultiPlaceHeight out;
    out.product = 1;
    auto local_max = [&](const Place& v) {
        Rational m(0);
        for (const auto& q : coords)
            if (sgn(q) != 0)
                m = std::max(m, norm(q, v));
        return m;
    };
    for (const auto& p : primes) {
        Rational m = local_max(FinitePrimeQ{p});
        out.local.push_back({p.get_str(), m});
        out.product *= m;
    }
    Rational m = local_max(ArchimedeanQ{});
    out.local.push_back({"inf", m});
    out.product *= m;
    out.height.exact = ExactLog(out.product);
    out.height.approx = out.height.exact->value();
    return out;
}

std::vector<ProjectivePoint> enumerate_points(std::size_t n, long bound)
{
    std::vector<ProjectivePoint> out;
    if (bound < 1)
        return out;
    std::vector<long> v(n + 1, -bound);
    for (;;) {
        // canonical: gcd 1 and first nonzero positive
        long g = 0;
        long first = 0;
        for (long c : v) {
            g = std::gcd(g, c);
            if (first == 0)
                first = c;
        }
        if (g == 1 && first > 0) {
            std::vector<Integer> c(v.begin(), v.end());
            out.emplace_back(std::move(c));
        }
        std::size_t i = 0;
        while (i <= n && v[i] == bound)
            v[i++] = -bound;
        if (i > n)
            break;
        ++v[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

FunctorialityWitness power_map_functoriality_check(const ProjectivePoint& P, long d)
{
    if (P.dimension() != 1 || d < 1)
        throw Error("power map needs a point of P^1 and d >= 1");
    FunctorialityWitness w;
    std::vector<Integer> c;
    for (const auto& x : P.coords())
        c.push_back(pow(x, static_cast<unsigned long>(d)));
    bool coprime = gcd(c[0], c[1]) == 1;
    w.image = ProjectivePoint(c);
    w.lhs = *naive_height(w.image).exact;
    w.rhs = naive_height(P).exact->times(d);
    w.holds = coprime && w.lhs == w.rhs;
    return w;
}

// ---- elliptic curves ------------------------------------------------------

EllipticCurve::EllipticCurve(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_))
{
    if (discriminant() == 0)
        throw Error("singular curve: 4a^3 + 27b^2 = 0");
}

Rational EllipticCurve::discriminant() const { return Rational(-16 * (4 * a * a * a + 27 * b * b)); }

std::string to_string(const ECPoint& P)
{
    if (P.infinity)
        return "O";
    return "(" + to_string(P.x) + ", " + to_string(P.y) + ")";
}

bool on_curve(const EllipticCurve& E, const ECPoint& P)
{
    return P.infinity || P.y * P.y == P.x * P.x * P.x + E.a * P.x + E.b;
}

namespace {

void require_on(const EllipticCurve& E, const ECPoint& P)
{
    if (!on_curve(E, P))
        throw Error("point " + to_string(P) + " is not on the curve");
}

}  // namespace

ECPoint ec_negate(const EllipticCurve& E, const ECPoint& P)
{
    require_on(E, P);
    if (P.infinity)
        return P;
    return ECPoint::affine(P.x, Rational(-P.y));
}

ECPoint ec_add(const EllipticCurve& E, const ECPoint& P, const ECPoint& Q)
{
    require_on(E, P);
    require_on(E, Q);
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    Rational lambda;
    if (P.x == Q.x) {
        if (P.y != Q.y || sgn(P.y) == 0)
            return ECPoint::at_infinity();
        lambda = (3 * P.x * P.x + E.a) / (2 * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x = lambda * lambda - P.x - Q.x;
    Rational y = lambda * (P.x - x) - P.y;
    return ECPoint::affine(x, y);
}

ECPoint ec_double(const EllipticCurve& E, const ECPoint& P) { return ec_add(E, P, P); }

ECPoint ec_multiply(const EllipticCurve& E, long k, const ECPoint& P)
{
    require_on(E, P);
    ECPoint base = k < 0 ? ec_negate(E, P) : P;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
    ECPoint acc = ECPoint::at_infinity();
    while (e) {
        if (e & 1)
            acc = ec_add(E, acc, base);
        base = ec_double(E, base);
        e >>= 1;
    }
    return acc;
}

HeightValue x_height(const ECPoint& P)
{
    if (P.infinity)
        return {ExactLog(), 0, 0};
    return naive_height(ProjectivePoint::from_rationals({P.x, Rational(1)}));
}

namespace {

Integer mod_pos(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Resultant of the binary quartic forms with the given descending coefficients.
Integer form_resultant(const std::vector<Integer>& f, const std::vector<Integer>& g)
{
    const std::size_t d = 4, size = 8;
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i <= d; ++i) {
            m[r][r + i] = f[i];
            m[d + r][r + i] = g[i];
        }
    Rational det = determinant(m, Rational(1));
    return Integer(det.get_num());
}

long double logl_abs(const Integer& n)
{
    long e;
    double mant = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) + static_cast<long double>(e) * std::log(2.0L);
}

}  // namespace

CanonicalHeight canonical_height(const EllipticCurve& E, const ECPoint& P, double tol, long max_steps)
{
    require_on(E, P);
    if (!(tol > 0))
        throw Error("tolerance must be positive");
    CanonicalHeight out;
    // Torsion points over Q have order at most 12.
    ECPoint kP = P;
    for (int k = 1; k <= 12; ++k) {
        if (kP.infinity) {
            out.torsion = true;
            out.value = {ExactLog(), 0, 0};
            out.partial = {0};
            return out;
        }
        kP = ec_add(E, kP, P);
    }

    // Integral model y^2 = x^3 + A x + B, x -> u^2 x; the naive heights of x
    // differ by a bounded amount, which leaves the limit unchanged.
    Integer u = Integer(E.a.get_den()) * Integer(E.b.get_den());
    Integer A = Integer(Rational(E.a * Rational(pow(u, 4))).get_num());
    Integer B = Integer(Rational(E.b * Rational(pow(u, 6))).get_num());
    Rational X0 = P.x * Rational(u * u);

    // x(2Q) = Phi(N, D) / Psi(N, D); gcd(Phi, Psi) divides R.
    std::vector<Integer> phi{Integer(1), Integer(0), Integer(-2 * A), Integer(-8 * B), Integer(A * A)};
    std::vector<Integer> psi{Integer(0), Integer(4), Integer(0), Integer(4 * A), Integer(4 * B)};
    Integer R = abs(form_resultant(phi, psi));
    auto Phi = [&](const Integer& n, const Integer& d) {
        Integer n2 = n * n, d2 = d * d;
        return Integer(n2 * n2 - 2 * A * n2 * d2 - 8 * B * n * d2 * d + A * A * d2 * d2);
    };
    auto Psi = [&](const Integer& n, const Integer& d) {
        Integer d2 = d * d;
        return Integer(4 * (n * n * n * d + A * n * d2 * d + B * d2 * d2));
    };

    // Exact residues of (N_n, D_n) modulo a shrinking modulus: each step divides by g_n | R.
    Integer modulus = pow(R, static_cast<unsigned long>(max_steps + 1));
    Integer N0 = X0.get_num(), D0 = X0.get_den();
    Integer n_mod = mod_pos(N0, modulus), d_mod = mod_pos(D0, modulus);

    // Archimedean part: L_n = log max(|N_n|, |D_n|) and the direction (N_n : D_n) scaled to sup norm 1.
    long double L = std::max(logl_abs(N0), logl_abs(D0));
    long double nh, dh;
    if (abs(N0) >= D0) {
        nh = sgn(N0);
        dh = static_cast<long double>(Rational(Rational(D0) / Rational(abs(N0))).get_d());
    } else {
        nh = static_cast<long double>(X0.get_d());
        dh = 1;
    }
    const long double la = static_cast<long double>(A.get_d()), lb = static_cast<long double>(B.get_d());

    out.partial.push_back(L);
    long double scale = 1, c_max = 0, bound = 0;
    const long double floor = 1e-15L * (1 + std::fabs(L));
    for (long n = 0; n < max_steps; ++n) {
        Integer pm = mod_pos(Phi(n_mod, d_mod), modulus);
        Integer sm = mod_pos(Psi(n_mod, d_mod), modulus);
        Integer g = gcd(gcd(pm, sm), R);
        modulus /= g;
        n_mod = mod_pos(Integer(pm / g), modulus);
        d_mod = mod_pos(Integer(sm / g), modulus);

        long double p_hat = nh * nh * nh * nh - 2 * la * nh * nh * dh * dh - 8 * lb * nh * dh * dh * dh +
                            la * la * dh * dh * dh * dh;
        long double s_hat = 4 * (nh * nh * nh * dh + la * nh * dh * dh * dh + lb * dh * dh * dh * dh);
        long double m = std::max(std::fabs(p_hat), std::fabs(s_hat));
        long double c = std::log(m) - logl_abs(g);
        nh = p_hat / m;
        dh = s_hat / m;
        L = 4 * L + c;
        scale *= 4;
        out.partial.push_back(L / scale);
        c_max = std::max(c_max, std::fabs(c));
        // |h_hat - h_n| <= sum_{k>n} 4^-k |c_k| <= C 4^-n / 3, with C = 4 * max observed |c|
        bound = 4 * c_max / (3 * scale) + floor;
        out.iterations = n + 1;
        if (n >= 2 && bound < tol)
            break;
    }
    if (!(bound < tol))
        throw PrecisionBudgetError("canonical height did not reach tolerance within " + std::to_string(max_steps) +
                                   " doublings");
    out.value.approx = static_cast<double>(out.partial.back());
    out.value.error_bound = static_cast<double>(bound);
    return out;
}

}  // namespace numfun

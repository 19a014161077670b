#include "numfun/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace numfun {

namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& c, cld z)
{
    cld r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * z + *it;
    return r;
}

// Rounding bound for the Horner evaluation: sum |c_k| |z|^k times a few eps.
long double horner_slack(const std::vector<long double>& c, cld z)
{
    long double az = std::abs(z), s = 0, p = 1;
    for (long double ck : c) {
        s += std::fabs(ck) * p;
        p *= az;
    }
    return 4 * static_cast<long double>(c.size()) * LDBL_EPSILON * s;
}

}  // namespace

RootSet complex_roots(const QPoly& f)
{
    const int n = f.degree();
    if (n < 1)
        throw RootFindingError("no roots for a constant polynomial");
    if (n > kMaxRootDegree)
        throw RootFindingError("degree " + std::to_string(n) + " exceeds the supported maximum of 12");
    // monic long double coefficients
    std::vector<long double> c;
    Rational lc = f.leading();
    for (int i = 0; i <= n; ++i)
        c.push_back(static_cast<long double>(Rational(f.coeff(i) / lc).get_d()));
    // Cauchy bound for the starting circle
    long double bound = 0;
    for (int i = 0; i < n; ++i)
        bound = std::max(bound, std::fabs(c[static_cast<std::size_t>(i)]));
    bound += 1;

    std::vector<cld> z(static_cast<std::size_t>(n));
    const cld seed(0.4L, 0.9L);
    cld w = 1;
    for (int i = 0; i < n; ++i) {
        w *= seed;
        z[static_cast<std::size_t>(i)] = w * bound / std::abs(w);
    }
    auto correction = [&](std::size_t i) {
        cld denom = 1;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i)
                denom *= z[i] - z[j];
        return horner(c, z[i]) / denom;
    };
    bool converged = false;
    for (int iter = 0; iter < 2000 && !converged; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            cld d = correction(i);
            z[i] -= d;
            change = std::max(change, std::abs(d) / std::max(1.0L, std::abs(z[i])));
        }
        converged = change < 64 * LDBL_EPSILON;
    }
    if (!converged)
        throw RootFindingError("Durand-Kerner iteration did not converge for " + to_string(f));

    RootSet out;
    long double radius = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        cld denom = 1;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i)
                denom *= z[i] - z[j];
        long double wi = (std::abs(horner(c, z[i])) + horner_slack(c, z[i])) / std::abs(denom);
        radius = std::max(radius, n * wi);
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (std::abs(z[i] - z[j]) <= 2 * radius)
                throw RootFindingError("inclusion disks overlap for " + to_string(f));
    for (const auto& r : z)
        out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    // conversion to double adds half an ulp per coordinate
    long double conv = 0;
    for (const auto& r : z)
        conv = std::max(conv, std::abs(r) * DBL_EPSILON);
    out.radius = static_cast<double>(radius + conv);
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

}  // namespace numfun

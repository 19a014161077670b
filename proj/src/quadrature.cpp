#include "numfun/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace numfun {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kMinPanel = 1e-11;

struct Grid {
    std::vector<Node> u, theta;
};

Grid sphere_grid(const std::vector<std::complex<double>>& singular, const QuadConfig& cfg)
{
    std::vector<double> ub, tb;
    for (const auto& q : singular) {
        double r2 = std::norm(q);
        double u = r2 / (1 + r2);
        if (u > 0 && u < 1)
            ub.push_back(u);
        if (r2 > 0) {
            double t = std::arg(q);
            if (t < 0)
                t += kTwoPi;
            tb.push_back(t);
        }
    }
    Grid g;
    g.u = graded_rule(0, 1, ub, cfg);
    if (tb.empty()) {
        g.theta = graded_rule(0, kTwoPi, {}, cfg);
    } else {
        // periodic: start the circle at the first breakpoint
        std::sort(tb.begin(), tb.end());
        double t0 = tb.front();
        std::vector<double> inner;
        for (double t : tb)
            if (t > t0)
                inner.push_back(t);
        g.theta = graded_rule(t0, t0 + kTwoPi, inner, cfg);
    }
    return g;
}

double row_sum(const SphereIntegrand& f, const Node& un, const std::vector<Node>& theta)
{
    double r = std::sqrt(un.x / (1 - un.x));
    double s = 0;
    for (const auto& tn : theta)
        s += tn.w * f(std::polar(r, tn.x));
    return un.w * s / kTwoPi;
}

}  // namespace

QuadConfig quad_config_from_resolution(int resolution)
{
    if (resolution < 2 || resolution > 64)
        throw std::invalid_argument("quadrature resolution must be in [2, 64]");
    return {resolution, resolution + 4, 0.15};
}

std::vector<Node> gauss_legendre(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<Node>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Node> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess
        long double x = std::cos(3.14159265358979323846L * (i + 0.75L) / (n + 0.5L)), dp = 0;
        for (int it2 = 0; it2 < 100; ++it2) {
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L)
                break;
        }
        nodes[static_cast<std::size_t>(i)] = {static_cast<double>(x), static_cast<double>(2 / ((1 - x * x) * dp * dp))};
    }
    cache.emplace(n, nodes);
    return nodes;
}

std::vector<Node> graded_rule(double a, double b, std::vector<double> breakpoints, const QuadConfig& cfg)
{
    auto base = gauss_legendre(cfg.points);
    std::vector<double> cuts{a};
    std::sort(breakpoints.begin(), breakpoints.end());
    for (double x : breakpoints)
        if (x > cuts.back() && x < b)
            cuts.push_back(x);
    cuts.push_back(b);

    std::vector<double> edges;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double x0 = cuts[k], x1 = cuts[k + 1], mid = 0.5 * (x0 + x1);
        edges.push_back(x0);
        for (int l = cfg.levels; l >= 1; --l)
            edges.push_back(x0 + (mid - x0) * std::pow(cfg.ratio, l));
        edges.push_back(mid);
        for (int l = 1; l <= cfg.levels; ++l)
            edges.push_back(x1 - (x1 - mid) * std::pow(cfg.ratio, l));
    }
    edges.push_back(b);
    // Panels narrower than this put nodes within rounding of a breakpoint.
    std::vector<double> kept{edges.front()};
    for (std::size_t e = 1; e < edges.size(); ++e) {
        double x = edges[e];
        bool last_of_gap = e + 1 == edges.size() || std::find(cuts.begin(), cuts.end(), x) != cuts.end();
        double tiny = kMinPanel * std::max(1.0, std::fabs(x));
        if (x - kept.back() < tiny) {
            if (last_of_gap)
                kept.back() = x;  // breakpoints themselves are never dropped
            continue;
        }
        kept.push_back(x);
    }
    edges.swap(kept);
    std::vector<Node> out;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        double lo = edges[e], hi = edges[e + 1];
        if (!(hi > lo))
            continue;
        double half = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
        for (const auto& n : base)
            out.push_back({c + half * n.x, half * n.w});
    }
    return out;
}

double integrate_sphere_once(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                             const QuadConfig& cfg)
{
    Grid g = sphere_grid(singular, cfg);
    std::vector<double> rows(g.u.size());
    const long n = static_cast<long>(g.u.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] = row_sum(f, g.u[static_cast<std::size_t>(i)], g.theta);
    double s = 0;
    for (double r : rows)
        s += r;
    return s;
}

double integrate_sphere_once_serial(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                                    const QuadConfig& cfg)
{
    Grid g = sphere_grid(singular, cfg);
    double s = 0;
    for (const auto& un : g.u)
        s += row_sum(f, un, g.theta);
    return s;
}

namespace {

template <class Once>
QuadResult with_estimate(Once once, const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                         const QuadConfig& cfg)
{
    double coarse = once(f, singular, cfg);
    QuadConfig fine_cfg = cfg.refined();
    double fine = once(f, singular, fine_cfg);
    Grid a = sphere_grid(singular, cfg), b = sphere_grid(singular, fine_cfg);
    QuadResult r;
    r.value = fine;
    r.error = std::fabs(fine - coarse);
    r.evaluations = static_cast<long>(a.u.size() * a.theta.size() + b.u.size() * b.theta.size());
    return r;
}

}  // namespace

QuadResult integrate_sphere(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                            const QuadConfig& cfg)
{
    return with_estimate(integrate_sphere_once, f, singular, cfg);
}

QuadResult integrate_sphere_serial(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                                   const QuadConfig& cfg)
{
    return with_estimate(integrate_sphere_once_serial, f, singular, cfg);
}

}  // namespace numfun

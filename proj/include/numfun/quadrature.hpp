#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace numfun {

/// Composite Gauss-Legendre rule graded geometrically toward breakpoints.
/// Each gap between breakpoints is split at its midpoint and both halves are
/// cut into `levels` panels shrinking by `ratio` toward the breakpoint.
struct QuadConfig {
    int points = 12;   ///< Gauss points per panel
    int levels = 16;   ///< graded panels per half-gap
    double ratio = 0.15;

    QuadConfig refined() const { return {points + 4, levels + 4, ratio}; }
};

/// Config derived from a single resolution knob (points per panel).
QuadConfig quad_config_from_resolution(int resolution);

struct QuadResult {
    double value = 0;
    double error = 0;  ///< |I(cfg) - I(cfg.refined())|
    long evaluations = 0;
};

struct Node {
    double x, w;
};

/// Gauss-Legendre nodes on [-1, 1].
std::vector<Node> gauss_legendre(int n);

/// Graded composite rule on [a, b] with interior breakpoints (sorted, inside).
std::vector<Node> graded_rule(double a, double b, std::vector<double> breakpoints, const QuadConfig& cfg);

using SphereIntegrand = std::function<double(std::complex<double>)>;

/// Integral over the Riemann sphere against the Fubini-Study measure of
/// total mass 1, in coordinates u = r^2/(1+r^2), theta, where
/// dmu = du dtheta / 2pi. The rule is graded toward u = 0, u = 1 and toward
/// the (u, theta) of every listed singular point. OpenMP over u-nodes;
/// partial sums are combined in a fixed order so results do not depend on
/// the thread count.
double integrate_sphere_once(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                             const QuadConfig& cfg);
/// Same rule, single-threaded; kept as the reference for the parallel kernel.
double integrate_sphere_once_serial(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                                    const QuadConfig& cfg);

/// Integral with a refinement-based error estimate.
QuadResult integrate_sphere(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                            const QuadConfig& cfg = {});
QuadResult integrate_sphere_serial(const SphereIntegrand& f, const std::vector<std::complex<double>>& singular,
                                   const QuadConfig& cfg = {});

}  // namespace numfun

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numfun/quadrature.hpp"

namespace numfun::suites {

struct Options {
    std::uint64_t seed = 20260607;
    double tol = 1e-8;  ///< canonical-height tolerance
    QuadConfig quad;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Result {
    std::string name;
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
};

struct Suite {
    std::string name;
    int criterion;  ///< acceptance criterion number
    std::string title;
    Result (*run)(const Options&);
};

const std::vector<Suite>& registry();
/// nullptr when unknown.
const Suite* find(const std::string& name);

/// Observed orders of the 5-point Laplacian of log G(P, .) against the FS
/// density at h, h/2, h/4.
struct LaplacianStudy {
    std::vector<double> h, error, order;
};
LaplacianStudy laplacian_study(double h0 = 0.1);

}  // namespace numfun::suites

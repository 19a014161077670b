#pragma once

#include <complex>
#include <vector>

#include "numfun/polynomial.hpp"

namespace numfun {

class RootFindingError : public Error {
public:
    using Error::Error;
};

struct RootSet {
    std::vector<std::complex<double>> roots;
    /// Each disk of this radius around a returned root contains exactly one
    /// true root (the disks are checked to be disjoint).
    double radius = 0;
};

constexpr int kMaxRootDegree = 12;

/// All complex roots of a squarefree rational polynomial of degree 1..12 by
/// Durand-Kerner iteration, with a posteriori inclusion radii n |W_i| where
/// W_i is the Weierstrass correction.
RootSet complex_roots(const QPoly& f);

}  // namespace numfun

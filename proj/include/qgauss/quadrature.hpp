#pragma once

#include <vector>

namespace qgauss {

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; computed once per n and cached.
/// Throws Error(InvalidArgument) for n < 1.
const QuadratureRule& gauss_legendre(int n);

}  // namespace qgauss

#pragma once

// Chebyshev-U, q-Hermite and continuous q-Hermite polynomials, all evaluated
// by forward three-term recurrence. Degree -1 evaluates to 0 and degree 0 to
// 1 for every family; degrees below -1 throw Error(InvalidArgument).

#include <span>
#include <vector>

namespace qgauss {

enum class PolynomialFamily {
  ChebyshevU,          // U_{n+1} = 2x U_n - U_{n-1}
  QHermite,            // H_{n+1} = x H_n - [n]_q H_{n-1}
  ContinuousQHermite,  // h_{n+1} = 2t h_n - (1 - q^n) h_{n-1}
};

double chebyshev_u(int n, double x);

/// sin((n+1) acos x) / sqrt(1 - x^2), for |x| < 1 only. Kept as an
/// independent cross-check of the recurrence.
double chebyshev_u_trig(int n, double x);

/// U_0(x), ..., U_n(x) from a single recurrence pass.
std::vector<double> chebyshev_u_sequence(int n, double x);

double q_hermite(int n, double x, double q);

double continuous_q_hermite(int n, double t, double q);

/// Dispatches on `family`; `q` is ignored for ChebyshevU.
double evaluate(PolynomialFamily family, int n, double x, double q = 0.0);

/// Pointwise evaluation of one polynomial over a grid.
std::vector<double> evaluate_grid(PolynomialFamily family, int n,
                                  std::span<const double> xs, double q = 0.0);

}  // namespace qgauss

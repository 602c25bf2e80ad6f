#include "qgauss/polynomials.hpp"

#include <cmath>

#include "qgauss/error.hpp"

namespace qgauss {

namespace {

void require_degree(int n) {
  if (n < -1) {
    throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= -1");
  }
}

}  // namespace

double chebyshev_u(int n, double x) {
  require_degree(n);
  if (n == -1) return 0.0;
  double previous = 0.0;
  double current = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * x * current - previous;
    previous = current;
    current = next;
  }
  return current;
}

double chebyshev_u_trig(int n, double x) {
  require_degree(n);
  if (!(std::abs(x) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "trigonometric U_n form needs |x| < 1");
  }
  const double theta = std::acos(x);
  return std::sin((n + 1) * theta) / std::sin(theta);
}

std::vector<double> chebyshev_u_sequence(int n, double x) {
  require_degree(n);
  std::vector<double> values(static_cast<std::size_t>(n + 1));
  if (n < 0) return values;
  values[0] = 1.0;
  if (n >= 1) values[1] = 2.0 * x;
  for (int k = 2; k <= n; ++k) {
    values[k] = 2.0 * x * values[k - 1] - values[k - 2];
  }
  return values;
}

double q_hermite(int n, double x, double q) {
  require_degree(n);
  if (n == -1) return 0.0;
  double previous = 0.0;
  double current = 1.0;
  double q_num = 0.0;  // [k]_q
  double q_pow = 1.0;  // q^k
  for (int k = 0; k < n; ++k) {
    const double next = x * current - q_num * previous;
    previous = current;
    current = next;
    q_num += q_pow;
    q_pow *= q;
  }
  return current;
}

double continuous_q_hermite(int n, double t, double q) {
  require_degree(n);
  if (n == -1) return 0.0;
  double previous = 0.0;
  double current = 1.0;
  double q_pow = 1.0;  // q^k
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * t * current - (1.0 - q_pow) * previous;
    previous = current;
    current = next;
    q_pow *= q;
  }
  return current;
}

double evaluate(PolynomialFamily family, int n, double x, double q) {
  switch (family) {
    case PolynomialFamily::ChebyshevU:
      return chebyshev_u(n, x);
    case PolynomialFamily::QHermite:
      return q_hermite(n, x, q);
    case PolynomialFamily::ContinuousQHermite:
      return continuous_q_hermite(n, x, q);
  }
  return 0.0;
}

std::vector<double> evaluate_grid(PolynomialFamily family, int n,
                                  std::span<const double> xs, double q) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(evaluate(family, n, x, q));
  return out;
}

}  // namespace qgauss

#include "qgauss/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgauss/detail/roots.hpp"
#include "qgauss/error.hpp"
#include "qgauss/polynomials.hpp"

namespace qgauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDegree = 6;

using UBasis = std::array<double, kDegree + 1>;  // coefficients on U_0..U_6

// z U_n = (U_{n+1} + U_{n-1}) / 2 with U_{-1} = 0.
UBasis times_z(const UBasis& p) {
  UBasis out{};
  for (int n = 0; n <= kDegree; ++n) {
    if (p[n] == 0.0) continue;
    if (n + 1 <= kDegree) out[n + 1] += 0.5 * p[n];
    if (n >= 1) out[n - 1] += 0.5 * p[n];
  }
  return out;
}

// p * (a - b z^2)
UBasis times_quadratic(const UBasis& p, double a, double b) {
  const UBasis z2 = times_z(times_z(p));
  UBasis out{};
  for (int n = 0; n <= kDegree; ++n) out[n] = a * p[n] - b * z2[n];
  return out;
}

void require_open_q(double q) {
  if (!(std::abs(q) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "envelope needs |q| < 1");
  }
}

}  // namespace

Envelope::Envelope(double q) : q_(q) {
  require_open_q(q);
  halfwidth_ = 2.0 / std::sqrt(1.0 - q);
  UBasis p{};
  p[0] = 1.0;
  double q_power = 1.0;
  for (int j = 1; j <= 3; ++j) {
    q_power *= q;
    p = times_quadratic(p, (1.0 + q_power) * (1.0 + q_power), 4.0 * q_power);
  }
  for (int n = 0; n < 4; ++n) coeffs_[n] = p[2 * n];
  mass_ = coeffs_[0] / (q_number(9, q) * q_number(5, q));
}

double Envelope::polynomial(double z) const {
  double value = 1.0;
  double q_power = 1.0;
  for (int j = 1; j <= 3; ++j) {
    q_power *= q_;
    value *= (1.0 + q_power) * (1.0 + q_power) - 4.0 * z * z * q_power;
  }
  return value;
}

double Envelope::kernel(double x) const {
  const double z = x / halfwidth_;
  if (std::abs(z) >= 1.0) return 0.0;
  // sqrt((1-q)(4-(1-q)x^2)) = 2 sqrt(1-q) sqrt(1-z^2)
  const double root = std::sqrt((1.0 - z) * (1.0 + z));
  return std::sqrt(1.0 - q_) * root * polynomial(z) /
         (kPi * q_number(9, q_) * q_number(5, q_));
}

double Envelope::pdf(double x) const {
  const double z = x / halfwidth_;
  if (std::abs(z) >= 1.0) return 0.0;
  const double root = std::sqrt((1.0 - z) * (1.0 + z));
  return std::sqrt(1.0 - q_) * root * polynomial(z) / (kPi * coeffs_[0]);
}

double Envelope::cdf(double x) const {
  const double z = x / halfwidth_;
  if (z <= -1.0) return 0.0;
  if (z >= 1.0) return 1.0;
  const double root = std::sqrt((1.0 - z) * (1.0 + z));
  const auto u = chebyshev_u_sequence(kDegree + 1, z);
  // int_{-1}^{z} sqrt(1-t^2) U_{2n}(t) dt
  //   = sqrt(1-z^2) (U_{2n+1}(z)/(4n+4) - U_{2n-1}(z)/(4n)),  n >= 1
  double polynomial_part = z;
  for (int n = 1; n < 4; ++n) {
    polynomial_part += 2.0 * coeffs_[n] / coeffs_[0] *
                       (u[2 * n + 1] / (4.0 * n + 4.0) - u[2 * n - 1] / (4.0 * n));
  }
  const double value = 0.5 + std::asin(z) / kPi + root / kPi * polynomial_part;
  return std::clamp(value, 0.0, 1.0);
}

double Envelope::inverse(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "envelope inverse needs u in (0, 1)");
  }
  if (u == 0.5) return 0.0;
  if (u > 0.5) return -inverse(1.0 - u);
  return detail::invert_increasing([this](double x) { return cdf(x); },
                                   [this](double x) { return pdf(x); }, u,
                                   -halfwidth_, halfwidth_);
}

double envelope_kernel(double x, double q) { return Envelope(q).kernel(x); }
double envelope_mass(double q) { return Envelope(q).mass(); }
double envelope_pdf(double x, double q) { return Envelope(q).pdf(x); }
double envelope_cdf(double x, double q) { return Envelope(q).cdf(x); }
double envelope_inverse(double u, double q) { return Envelope(q).inverse(u); }

double rejection_bound(double q, const TruncationPolicy& policy) {
  require_open_q(q);
  if (q == 0.0) return 1.0;
  double bound = (1.0 + q) * (1.0 - std::pow(q, 3)) * (1.0 - std::pow(q, 5)) *
                 (1.0 - std::pow(q, 9));
  // Tail factors deviate from 1 by at most 3|q|^k (q > 0) or 7|q|^k (q < 0).
  const int cutoff = infinite_product_cutoff(q > 0.0 ? 3.0 : 7.0, q,
                                             policy.epsilon);
  double q_power = std::pow(q, 4);
  for (int k = 4; k < cutoff; ++k) {
    if (q > 0.0) {
      bound *= (1.0 - q_power * q_power) * (1.0 + q_power);
    } else {
      const double a = 1.0 + std::abs(q_power);
      bound *= a * a * (1.0 - q_power);
    }
    q_power *= q;
  }
  return bound;
}

}  // namespace qgauss

#pragma once

// The dominating "easy" density used by the rejection sampler:
//
//   kernel(x|q) = sqrt((1-q)(4-(1-q)x^2)) prod_{j=1..3} ((1+q^j)^2 - (1-q)q^j x^2)
//                 / (2 pi [9]_q [5]_q)
//
// The kernel is what the ratio bound f_H <= M(q) kernel is proved against,
// but it does not integrate to one: its mass is (1-q+q^2)[5]_q[7]_q /
// ([9]_q[5]_q). envelope_pdf/envelope_cdf/envelope_inverse describe the
// normalised law kernel/mass.

#include <array>

#include "qgauss/qseries.hpp"

namespace qgauss {

/// Envelope of one q with the degree-6 polynomial factor held in the
/// Chebyshev-U basis, so the distribution function integrates termwise in
/// closed form. Immutable and cheap to copy.
class Envelope {
 public:
  /// Throws Error(InvalidArgument) unless |q| < 1.
  explicit Envelope(double q);

  double q() const noexcept { return q_; }
  double halfwidth() const noexcept { return halfwidth_; }

  /// Coefficients of prod_j ((1+q^j)^2 - 4 z^2 q^j) on U_0, U_2, U_4, U_6.
  const std::array<double, 4>& chebyshev_coefficients() const noexcept {
    return coeffs_;
  }

  double kernel(double x) const;
  double mass() const noexcept { return mass_; }
  double pdf(double x) const;
  double cdf(double x) const;
  double inverse(double u) const;

 private:
  double polynomial(double z) const;

  double q_;
  double halfwidth_;
  std::array<double, 4> coeffs_{};
  double mass_;
};

double envelope_kernel(double x, double q);
double envelope_mass(double q);
double envelope_pdf(double x, double q);
double envelope_cdf(double x, double q);
double envelope_inverse(double u, double q);

/// M(q): proven sup of f_H / envelope_kernel. Exactly 1 at q = 0.
double rejection_bound(double q, const TruncationPolicy& policy = {});

}  // namespace qgauss

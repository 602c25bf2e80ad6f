#pragma once

// The q-Gaussian law P_H(q): density in product and Chebyshev-expansion
// form, distribution function, quantile, moments, modality and the
// error-bounded choice of series length.

#include <span>
#include <vector>

#include "qgauss/qseries.hpp"

namespace qgauss {

/// Support of P_H(q). For q = -1 the law is the two-point set {-1, 1} and
/// `two_point` is set; for q = 1 the bounds are infinite.
struct Interval {
  double lower;
  double upper;
  bool two_point = false;
};

Interval support(const QParameter& qp);

enum class DensityForm { Product, Expansion };

struct DensityEvaluation {
  double x = 0.0;
  double value = 0.0;      // clamped at 0
  double raw_value = 0.0;  // truncated series before clamping
  DensityForm form = DensityForm::Expansion;
  int terms_used = 0;
  double error_bound = 0.0;
};

/// Continuous root N(q, eps) of the truncation-bound equation and the
/// integer series length max(4, ceil(N)) actually used.
struct TermsEstimate {
  double root = 0.0;
  int resolved_n = 4;
};

/// Series paths refuse |q| above this; N(q, eps) blows up as |q| -> 1.
inline constexpr double kSeriesQLimit = 0.999;

/// n |q|^{(n-1)(n-2)/2} / (pi (1 - q^2)^2): sup-error of the density
/// expansion truncated at n terms.
double pdf_truncation_bound(double q, double n);

/// (|q|^{n(n-1)/2} + |q|^{n(n+1)/2}) / (2 pi (1 - |q|^n)): sup-error of the
/// distribution-function series truncated at n terms.
double cdf_truncation_bound(double q, double n);

TermsEstimate terms_for_tolerance_pdf(double q, double eps);
TermsEstimate terms_for_tolerance_cdf(double q, double eps);

/// Fill `policy.resolved_n` for the density (resp. distribution-function)
/// series. A caller-supplied resolved_n > 0 is kept. Throws
/// Error(TermBudgetExceeded) when the length exceeds policy.max_terms or
/// |q| > kSeriesQLimit.
TruncationPolicy resolve_pdf_policy(const QParameter& qp,
                                    TruncationPolicy policy);
TruncationPolicy resolve_cdf_policy(const QParameter& qp,
                                    TruncationPolicy policy);

/// Density from the two infinite products. q = 1 gives the standard normal
/// density; q = -1 throws Error(UnsupportedKind).
DensityEvaluation pdf_product(double x, const QParameter& qp,
                              const TruncationPolicy& policy);

/// Density from the truncated Chebyshev-U expansion.
DensityEvaluation pdf_expansion(double x, const QParameter& qp,
                                const TruncationPolicy& policy);

/// Distribution function, clamped to [0, 1]; closed forms at q = +-1.
double cdf(double y, const QParameter& qp, const TruncationPolicy& policy);

/// Left-continuous inverse of cdf for p in (0, 1).
double quantile(double p, const QParameter& qp, const TruncationPolicy& policy);

/// E X^r, from expanding x^r in q-Hermite polynomials. Valid on [-1, 1].
double moment(int r, double q);

/// E X^0, ..., E X^max_order.
std::vector<double> moments(int max_order, double q);

/// sum_{k>=0} (2k+1)^2 q^{k(k+1)/2}; its largest negative root separates
/// unimodal from bimodal densities.
double mode_indicator(double q, const TruncationPolicy& policy = {});

/// Largest root of mode_indicator in (-1, 0), about -0.1077.
double mode_threshold(const TruncationPolicy& policy = {});

bool is_bimodal(double q);

/// Central second difference of the density at x = 0.
double pdf_curvature_at_origin(const QParameter& qp, double step = 1e-3);

/// Immutable evaluation handle: q, resolved series lengths and the cached
/// series coefficients. Safe to share between threads.
class QGaussian {
 public:
  explicit QGaussian(QParameter qp, TruncationPolicy policy = {});

  const QParameter& parameter() const noexcept { return qp_; }
  const TruncationPolicy& pdf_policy() const noexcept { return pdf_policy_; }
  const TruncationPolicy& cdf_policy() const noexcept { return cdf_policy_; }
  Interval support() const { return qgauss::support(qp_); }

  DensityEvaluation density(double x) const;
  double pdf(double x) const { return density(x).value; }
  double cdf(double y) const;
  double quantile(double p) const;

 private:
  QParameter qp_;
  TruncationPolicy pdf_policy_;
  TruncationPolicy cdf_policy_;
  std::vector<double> density_coefficients_;
  std::vector<double> cdf_coefficients_;
};

namespace detail {

/// (-1)^{k-1} q^{C(k,2)}, k = 1..n.
std::vector<double> density_coefficients(double q, int n);

/// (-1)^{k-1} q^{C(k,2)} (1 + q^k) / (2k), k = 1..n.
std::vector<double> cdf_coefficients(double q, int n);

/// sum_k c_k U_{2k-2}(z).
double even_chebyshev_series(double z, std::span<const double> c);

/// sum_k c_k U_{2k-1}(z).
double odd_chebyshev_series(double z, std::span<const double> c);

double normal_pdf(double x);
double normal_cdf(double x);

}  // namespace detail

}  // namespace qgauss

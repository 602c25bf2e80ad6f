#include "qgauss/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qgauss/detail/roots.hpp"
#include "qgauss/error.hpp"
#include "qgauss/quadrature.hpp"

namespace qgauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Within this distance of |z| = 1 the product form switches to the
// factorisation with the (4 - (1-q)x^2) factor cancelled.
constexpr double kEndpointGuard = 1e-8;

// Bracket for normal quantiles; Phi(-40) underflows to 0.
constexpr double kNormalBracket = 40.0;

void require_continuous(const QParameter& qp, const char* what) {
  if (qp.kind() == QKind::TwoPoint) {
    throw Error(ErrorKind::UnsupportedKind,
                std::string(what) +
                    " is undefined for the two-point law q = -1");
  }
}

void require_series_range(double q) {
  if (std::abs(q) > kSeriesQLimit) {
    throw Error(ErrorKind::TermBudgetExceeded,
                "series evaluation is capped at |q| <= 0.999 (got q = " +
                    std::to_string(q) +
                    "); use q = 1 or q = -1 closed forms near the ends");
  }
}

// 1 - z^2 without cancellation near |z| = 1.
double one_minus_square(double z) { return (1.0 - z) * (1.0 + z); }

double scaled_abscissa(double x, double q) {
  return x * std::sqrt(1.0 - q) / 2.0;
}

// Largest root of an eventually decreasing log-bound, starting from a point
// `lo` at or beyond its maximum.
template <class LogExcess>
double largest_root(LogExcess&& excess, double lo) {
  if (excess(lo) <= 0.0) return lo;
  double hi = std::max(2.0 * lo, lo + 1.0);
  while (excess(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) {
      throw Error(ErrorKind::NonConvergent,
                  "truncation-bound root search diverged");
    }
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_tolerance(double q, double eps) {
  if (!(eps > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  }
  if (!(std::abs(q) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "truncation bounds need |q| < 1");
  }
}

TruncationPolicy finish_policy(TruncationPolicy policy, int needed) {
  if (policy.resolved_n <= 0) policy.resolved_n = needed;
  if (policy.resolved_n > policy.max_terms) {
    throw Error(ErrorKind::TermBudgetExceeded,
                "series needs " + std::to_string(policy.resolved_n) +
                    " terms but max_terms is " +
                    std::to_string(policy.max_terms));
  }
  return policy;
}

double expansion_density(double x, double q, std::span<const double> coeffs,
                         double* raw) {
  const double z = scaled_abscissa(x, q);
  if (std::abs(z) >= 1.0) {
    *raw = 0.0;
    return 0.0;
  }
  const double root = std::sqrt(one_minus_square(z));
  // sqrt(4 - (1-q)x^2) = 2 sqrt(1 - z^2)
  *raw = std::sqrt(1.0 - q) / kPi * root *
         detail::even_chebyshev_series(z, coeffs);
  return std::max(*raw, 0.0);
}

double expansion_cdf(double y, double q, std::span<const double> coeffs) {
  const double z = scaled_abscissa(y, q);
  if (z <= -1.0) return 0.0;
  if (z >= 1.0) return 1.0;
  const double root = std::sqrt(one_minus_square(z));
  const double value = 0.5 + std::asin(z) / kPi +
                       root / kPi * detail::odd_chebyshev_series(z, coeffs);
  return std::clamp(value, 0.0, 1.0);
}

constexpr double kTailSwitch = 1e-4;
constexpr int kTailNodes = 64;

// Mass below y <= 0 by Gauss-Legendre in theta = asin(x / h) on the product form.
double lower_tail(double y, const QParameter& qp) {
  const double h = qp.support_halfwidth();
  const double top = std::asin(std::clamp(y / h, -1.0, 1.0));
  const double mid = 0.5 * (top - kPi / 2.0);
  const double half = 0.5 * (top + kPi / 2.0);
  const TruncationPolicy policy{1e-16, 1000, 0};
  const QuadratureRule& rule = gauss_legendre(kTailNodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = mid + half * rule.nodes[i];
    sum += rule.weights[i] * std::cos(theta) *
           pdf_product(h * std::sin(theta), qp, policy).value;
  }
  return sum * half * h;
}

// Series in the bulk; tails with F < kTailSwitch come from lower_tail.
double continuous_cdf(double y, const QParameter& qp, std::span<const double> coeffs) {
  const double h = qp.support_halfwidth();
  if (y <= -h) return 0.0;
  if (y >= h) return 1.0;
  const double series = expansion_cdf(y, qp.value(), coeffs);
  if (series >= kTailSwitch && series <= 1.0 - kTailSwitch) return series;
  return y < 0.0 ? lower_tail(y, qp) : 1.0 - lower_tail(-y, qp);
}

double two_point_cdf(double y) {
  if (y < -1.0) return 0.0;
  if (y < 1.0) return 0.5;
  return 1.0;
}

double two_point_quantile(double p) { return p <= 0.5 ? -1.0 : 1.0; }

double normal_quantile(double p) {
  return detail::invert_increasing(detail::normal_cdf, detail::normal_pdf, p,
                                   -kNormalBracket, kNormalBracket);
}

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "quantile needs p in (0, 1)");
  }
}

}  // namespace

namespace detail {

std::vector<double> density_coefficients(double q, int n) {
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(std::max(n, 0)));
  double binomial_power = 1.0;  // q^{C(k,2)}
  double q_power = 1.0;         // q^{k-1}
  for (int k = 1; k <= n; ++k) {
    c.push_back((k % 2 == 1 ? 1.0 : -1.0) * binomial_power);
    binomial_power *= q_power * q;  // q^{C(k+1,2)} = q^{C(k,2)} q^k
    q_power *= q;
  }
  return c;
}

std::vector<double> cdf_coefficients(double q, int n) {
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(std::max(n, 0)));
  double binomial_power = 1.0;  // q^{C(k,2)}
  double q_power = q;           // q^k
  for (int k = 1; k <= n; ++k) {
    const double sign = k % 2 == 1 ? 1.0 : -1.0;
    c.push_back(sign * binomial_power * (1.0 + q_power) / (2.0 * k));
    binomial_power *= q_power;
    q_power *= q;
  }
  return c;
}

double even_chebyshev_series(double z, std::span<const double> c) {
  // U_0 = 1, U_1 = 2z; each step advances the recurrence by two degrees.
  double even = 1.0;
  double odd = 2.0 * z;
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum += c[k] * even;
    even = 2.0 * z * odd - even;
    odd = 2.0 * z * even - odd;
  }
  return sum;
}

double odd_chebyshev_series(double z, std::span<const double> c) {
  double even = 1.0;
  double odd = 2.0 * z;
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum += c[k] * odd;
    even = 2.0 * z * odd - even;
    odd = 2.0 * z * even - odd;
  }
  return sum;
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

}  // namespace detail

Interval support(const QParameter& qp) {
  switch (qp.kind()) {
    case QKind::TwoPoint:
      return {-1.0, 1.0, true};
    case QKind::Normal:
      return {-kInf, kInf, false};
    case QKind::Continuous:
      break;
  }
  const double h = qp.support_halfwidth();
  return {-h, h, false};
}

double pdf_truncation_bound(double q, double n) {
  const double r = std::abs(q);
  const double denom = kPi * (1.0 - q * q) * (1.0 - q * q);
  return n * std::pow(r, (n - 1.0) * (n - 2.0) / 2.0) / denom;
}

double cdf_truncation_bound(double q, double n) {
  const double r = std::abs(q);
  return (std::pow(r, n * (n - 1.0) / 2.0) + std::pow(r, n * (n + 1.0) / 2.0)) /
         (2.0 * kPi * (1.0 - std::pow(r, n)));
}

TermsEstimate terms_for_tolerance_pdf(double q, double eps) {
  require_tolerance(q, eps);
  const double r = std::abs(q);
  if (r == 0.0) return {2.0, 4};
  const double log_r = std::log(r);
  const double log_target =
      std::log(eps) + std::log(kPi * (1.0 - q * q) * (1.0 - q * q));
  auto excess = [&](double n) {
    return std::log(n) + (n - 1.0) * (n - 2.0) / 2.0 * log_r - log_target;
  };
  // d/dn of the log-bound vanishes at n(n - 3/2) = -1/ln r.
  const double peak = (1.5 + std::sqrt(2.25 - 4.0 / log_r)) / 2.0;
  const double root = largest_root(excess, std::max(2.0, peak));
  return {root, std::max(4, static_cast<int>(std::ceil(root)))};
}

TermsEstimate terms_for_tolerance_cdf(double q, double eps) {
  require_tolerance(q, eps);
  const double r = std::abs(q);
  if (r == 0.0) return {1.0, 4};
  auto excess = [&](double n) {
    return std::log(cdf_truncation_bound(q, n)) - std::log(eps);
  };
  const double root = largest_root(excess, 1.0);
  return {root, std::max(4, static_cast<int>(std::ceil(root)))};
}

TruncationPolicy resolve_pdf_policy(const QParameter& qp,
                                    TruncationPolicy policy) {
  if (!qp.is_continuous()) return policy;
  require_series_range(qp.value());
  int needed = 0;
  if (policy.resolved_n <= 0) {
    needed = terms_for_tolerance_pdf(qp.value(), policy.epsilon).resolved_n;
  }
  return finish_policy(policy, needed);
}

TruncationPolicy resolve_cdf_policy(const QParameter& qp,
                                    TruncationPolicy policy) {
  if (!qp.is_continuous()) return policy;
  require_series_range(qp.value());
  int needed = 0;
  if (policy.resolved_n <= 0) {
    needed = terms_for_tolerance_cdf(qp.value(), policy.epsilon).resolved_n;
  }
  return finish_policy(policy, needed);
}

DensityEvaluation pdf_product(double x, const QParameter& qp,
                              const TruncationPolicy& policy) {
  require_continuous(qp, "density");
  DensityEvaluation out;
  out.x = x;
  out.form = DensityForm::Product;
  if (qp.kind() == QKind::Normal) {
    out.value = out.raw_value = detail::normal_pdf(x);
    return out;
  }
  const double q = qp.value();
  const double z = scaled_abscissa(x, q);
  if (std::abs(z) >= 1.0) return out;

  // Factors (1+q^k)^2 - (1-q) x^2 q^k = 1 + q^k (2 - 4z^2) + q^{2k}
  // deviate from 1 by at most 3|q|^k.
  const int cutoff = infinite_product_cutoff(3.0, q, policy.epsilon);
  const double tail = 4.0 * z * z;
  const bool near_endpoint = std::abs(z) > 1.0 - kEndpointGuard;
  double product = 1.0;
  double q_power = near_endpoint ? q : 1.0;
  for (int k = near_endpoint ? 1 : 0; k < cutoff; ++k) {
    product *= (1.0 + q_power) * (1.0 + q_power) - tail * q_power;
    q_power *= q;
  }
  const double euler = pochhammer_infinite(q, q, policy);
  const double root = std::sqrt(one_minus_square(z));
  const double prefactor = std::sqrt(1.0 - q) / (2.0 * kPi);
  // sqrt(4 - (1-q)x^2) = 2 sqrt(1 - z^2)
  if (near_endpoint) {
    out.raw_value = prefactor * 2.0 * root * product * euler;
  } else {
    out.raw_value = prefactor / (2.0 * root) * product * euler;
  }
  out.value = std::max(out.raw_value, 0.0);
  out.terms_used = cutoff;
  // |log(1+u)| <= 2|u| for |u| <= 1/2, and each product's tail sum is < eps.
  out.error_bound = std::expm1(4.0 * policy.epsilon) * out.value;
  return out;
}

DensityEvaluation pdf_expansion(double x, const QParameter& qp,
                                const TruncationPolicy& policy) {
  require_continuous(qp, "density");
  DensityEvaluation out;
  out.x = x;
  out.form = DensityForm::Expansion;
  if (qp.kind() == QKind::Normal) {
    out.value = out.raw_value = detail::normal_pdf(x);
    return out;
  }
  const TruncationPolicy resolved = resolve_pdf_policy(qp, policy);
  const auto coeffs =
      detail::density_coefficients(qp.value(), resolved.resolved_n);
  out.value = expansion_density(x, qp.value(), coeffs, &out.raw_value);
  out.terms_used = resolved.resolved_n;
  out.error_bound = pdf_truncation_bound(qp.value(), resolved.resolved_n);
  return out;
}

double cdf(double y, const QParameter& qp, const TruncationPolicy& policy) {
  switch (qp.kind()) {
    case QKind::TwoPoint:
      return two_point_cdf(y);
    case QKind::Normal:
      return detail::normal_cdf(y);
    case QKind::Continuous:
      break;
  }
  const TruncationPolicy resolved = resolve_cdf_policy(qp, policy);
  const auto coeffs = detail::cdf_coefficients(qp.value(), resolved.resolved_n);
  return continuous_cdf(y, qp, coeffs);
}

double quantile(double p, const QParameter& qp,
                const TruncationPolicy& policy) {
  require_probability(p);
  return QGaussian(qp, policy).quantile(p);
}

double moment(int r, double q) {
  if (r < 0) {
    throw Error(ErrorKind::InvalidArgument, "moment order must be >= 0");
  }
  if (!(q >= -1.0 && q <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "moment needs q in [-1, 1]");
  }
  if (r % 2 == 1) return 0.0;
  // x^n = sum_k c[k] H_k(x|q); x H_k = H_{k+1} + [k]_q H_{k-1}.
  std::vector<double> c(static_cast<std::size_t>(r) + 2, 0.0);
  std::vector<double> q_num(static_cast<std::size_t>(r) + 2, 0.0);
  for (int k = 0; k <= r + 1; ++k) q_num[k] = q_number(k, q);
  c[0] = 1.0;
  for (int n = 0; n < r; ++n) {
    std::vector<double> next(c.size(), 0.0);
    for (int k = 0; k <= n + 1; ++k) {
      const double from_below = k >= 1 ? c[k - 1] : 0.0;
      const double from_above = k + 1 <= r ? q_num[k + 1] * c[k + 1] : 0.0;
      next[k] = from_below + from_above;
    }
    c = std::move(next);
  }
  return c[0];
}

std::vector<double> moments(int max_order, double q) {
  std::vector<double> out;
  for (int r = 0; r <= max_order; ++r) out.push_back(moment(r, q));
  return out;
}

double mode_indicator(double q, const TruncationPolicy& policy) {
  if (!(std::abs(q) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "mode_indicator needs |q| < 1");
  }
  double sum = 0.0;
  double q_power = 1.0;  // q^{k(k+1)/2}
  for (int k = 0;; ++k) {
    const double weight = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    const double term = weight * q_power;
    sum += term;
    q_power *= std::pow(q, k + 1);
    const double next = (2.0 * k + 3.0) * (2.0 * k + 3.0) * std::abs(q_power);
    if (k >= 5 && next < policy.epsilon && next < std::abs(term)) break;
    if (k > 100000) {
      throw Error(ErrorKind::NonConvergent, "mode_indicator did not converge");
    }
  }
  return sum;
}

double mode_threshold(const TruncationPolicy& policy) {
  // Scan down from 0 to the first sign change, then bisect.
  constexpr double step = 0.01;
  double hi = 0.0;
  double lo = -step;
  while (mode_indicator(lo, policy) > 0.0) {
    hi = lo;
    lo -= step;
    if (lo <= -1.0) {
      throw Error(ErrorKind::NonConvergent, "no sign change in (-1, 0)");
    }
  }
  while (hi - lo > detail::kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mode_indicator(mid, policy) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool is_bimodal(double q) {
  if (!(std::abs(q) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "is_bimodal needs |q| < 1");
  }
  return q < mode_threshold();
}

double pdf_curvature_at_origin(const QParameter& qp, double step) {
  TruncationPolicy policy;
  policy.epsilon = 1e-14;
  const QGaussian law(qp, policy);
  const double centre = law.density(0.0).raw_value;
  const double left = law.density(-step).raw_value;
  const double right = law.density(step).raw_value;
  return (left - 2.0 * centre + right) / (step * step);
}

QGaussian::QGaussian(QParameter qp, TruncationPolicy policy)
    : qp_(qp),
      pdf_policy_(resolve_pdf_policy(qp, policy)),
      cdf_policy_(resolve_cdf_policy(qp, policy)) {
  if (qp_.is_continuous()) {
    density_coefficients_ =
        detail::density_coefficients(qp_.value(), pdf_policy_.resolved_n);
    cdf_coefficients_ =
        detail::cdf_coefficients(qp_.value(), cdf_policy_.resolved_n);
  }
}

DensityEvaluation QGaussian::density(double x) const {
  require_continuous(qp_, "density");
  DensityEvaluation out;
  out.x = x;
  out.form = DensityForm::Expansion;
  if (qp_.kind() == QKind::Normal) {
    out.value = out.raw_value = detail::normal_pdf(x);
    return out;
  }
  out.value =
      expansion_density(x, qp_.value(), density_coefficients_, &out.raw_value);
  out.terms_used = pdf_policy_.resolved_n;
  out.error_bound = pdf_truncation_bound(qp_.value(), pdf_policy_.resolved_n);
  return out;
}

double QGaussian::cdf(double y) const {
  switch (qp_.kind()) {
    case QKind::TwoPoint:
      return two_point_cdf(y);
    case QKind::Normal:
      return detail::normal_cdf(y);
    case QKind::Continuous:
      break;
  }
  return continuous_cdf(y, qp_, cdf_coefficients_);
}

double QGaussian::quantile(double p) const {
  require_probability(p);
  if (qp_.kind() != QKind::TwoPoint) {
    if (p == 0.5) return 0.0;
    if (p > 0.5) return -quantile(1.0 - p);
  }
  switch (qp_.kind()) {
    case QKind::TwoPoint:
      return two_point_quantile(p);
    case QKind::Normal:
      return normal_quantile(p);
    case QKind::Continuous:
      break;
  }
  const double h = qp_.support_halfwidth();
  return detail::invert_increasing([this](double x) { return cdf(x); },
                                   [this](double x) { return pdf(x); }, p, -h,
                                   h);
}

}  // namespace qgauss

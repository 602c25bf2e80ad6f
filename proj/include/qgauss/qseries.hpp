#pragma once

// q-arithmetic: q-numbers, q-factorials, Gaussian binomials, Pochhammer
// symbols and the two Jacobi theta functions used by the density checks.

#include <limits>

namespace qgauss {

enum class QKind {
  TwoPoint,    // q = -1
  Continuous,  // |q| < 1
  Normal,      // q = 1
};

/// A validated q in [-1, 1]. Construction throws Error(InvalidArgument) for
/// anything else, including NaN.
class QParameter {
 public:
  explicit QParameter(double q);

  double value() const noexcept { return q_; }
  QKind kind() const noexcept { return kind_; }

  /// 2/sqrt(1-q) for |q| < 1, +inf for q = 1 and 1 for q = -1.
  double support_halfwidth() const noexcept { return halfwidth_; }

  bool is_continuous() const noexcept { return kind_ == QKind::Continuous; }

 private:
  double q_;
  QKind kind_;
  double halfwidth_;
};

/// Accuracy contract for every truncated series or product.
///
/// `epsilon` is the absolute error target, `max_terms` caps the number of
/// series terms, and `resolved_n` is filled in by the term selectors in the
/// distribution module (0 means "not resolved yet").
struct TruncationPolicy {
  double epsilon = 1e-12;
  int max_terms = 1000;
  int resolved_n = 0;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
double q_number(int n, double q);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
double q_factorial(int n, double q);

/// Gaussian binomial coefficient; zero for k outside [0, n].
double q_binomial(int n, int k, double q);

/// Finite Pochhammer symbol (a; q)_n = prod_{k<n} (1 - a q^k).
double pochhammer(double a, double q, int n);

/// Number of leading factors of prod_k (1 + c_k q^k), |c_k| <= dominance,
/// needed so that the neglected tail satisfies
/// dominance |q|^K / (1 - |q|) < eps (and dominance |q|^K < 1/2).
int infinite_product_cutoff(double dominance, double q, double eps);

/// (a; q)_inf truncated by infinite_product_cutoff(|a|, q, policy.epsilon).
/// Throws Error(NonConvergent) when |q| >= 1.
double pochhammer_infinite(double a, double q, const TruncationPolicy& policy);

/// Period-1 theta functions with nome q in (0, 1):
///   theta3(z|q) = 1 + 2 sum_{n>=1} q^{n^2} cos(2 pi n z)
///   theta2(z|q) = 2 sum_{n>=0} q^{(n+1/2)^2} cos((2n+1) pi z)
/// Evaluated through the Jacobi triple product, which has no cancellation
/// near the zeros at z = 1/2. The product stops once the remaining factors
/// differ from 1 by less than policy.epsilon / 1000.
/// Throws Error(NonConvergent) for q outside (0, 1).
double theta2(double z, double q, const TruncationPolicy& policy);
double theta3(double z, double q, const TruncationPolicy& policy);

}  // namespace qgauss

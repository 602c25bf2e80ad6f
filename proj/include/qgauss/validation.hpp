#pragma once

// Numerical evidence for the q-Gaussian identities: a Gauss-Legendre
// quadrature over the support, the q-series identity checks, the theta
// representation, the tail lemma, Kolmogorov-Smirnov statistics and a suite
// runner that gathers everything into one report.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qgauss/quadrature.hpp"
#include "qgauss/qseries.hpp"

namespace qgauss {

/// One numerical check. `passed` is always `abs_error <= tolerance`.
/// Checks with `gated == false` are recorded but do not fail a suite.
struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool gated = true;
  std::string notes;
};

/// Builds a CheckResult comparing lhs with rhs in absolute terms.
CheckResult compare(std::string name, double lhs, double rhs, double tolerance,
                    bool gated = true, std::string notes = {});

/// Integral of f over [-2/sqrt(1-q), 2/sqrt(1-q)] after substituting
/// x = (2/sqrt(1-q)) sin(theta), which removes the square-root endpoints.
double integrate(const std::function<double(double)>& f, double q,
                 int nodes = 256);

/// Policy used by the identity checks when none is given.
TruncationPolicy identity_policy();

/// (-q; q)_inf (q^2; q^2)_inf against sum_{k>=1} q^{C(k,2)}.
CheckResult check_triple_product(double q,
                                 const TruncationPolicy& policy = identity_policy());

/// (q^3; q^3)_inf against 1 + sum_{k>=1} (-1)^k (q^{C(3k,2)} + q^{C(3k+1,2)}).
CheckResult check_q3(double q);

/// (q; q)_inf^3 against 1 + sum_{k>=2} (-1)^{k+1} (2k-1) q^{C(k,2)}.
CheckResult check_cubed_euler(double q);

/// [2n, n]_q against sum_{k=1..n} (-1)^{k-1} (1+q^k) q^{C(k,2)} [2n, n-k]_q.
CheckResult check_qbinomial_sum(int n, double q);

/// sum_{k>=n} (2k-1) r^{C(k,2)} <= 2n r^{n(n-1)/2} / (1-r^2)^2.
/// abs_error is the amount by which the inequality is violated (0 if it
/// holds) and the tolerance is 0.
CheckResult check_tail_lemma(double r, int n);

struct ThetaCheck {
  CheckResult constancy;  // relative spread of f_H / (theta3 theta2), gated
  CheckResult constant;   // mean ratio against C_q, recorded only
};

/// z values in (-1/2, 1/2) away from the zeros of theta2.
std::vector<double> default_theta_grid();

ThetaCheck check_theta_form(double q, std::span<const double> z_grid);

/// sup over a grid of |pdf_product - pdf_expansion| against the reported
/// truncation bound of the expansion under `policy`.
CheckResult check_form_equivalence(double q, const TruncationPolicy& policy,
                                   int grid_points = 1001);

/// D_n = max_i max(i/n - F(x_i), F(x_i) - (i-1)/n) for ascending samples.
/// Throws Error(InvalidArgument) for empty or unsorted input.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic one-sample KS critical value at alpha = 0.01: 1.63 / sqrt(n).
double ks_critical_value(std::size_t n);

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;                // gated failures
  std::size_t informational_failed = 0;  // ungated failures
  bool ok() const noexcept { return failed == 0; }
};

SuiteReport summarize(std::vector<CheckResult> checks);

/// q values used by `qgauss validate` when none are given.
std::vector<double> default_suite_q();

/// Runs every check for each q (checks not defined at a q are skipped), plus
/// the q-independent ones. Checks run concurrently; order is deterministic.
SuiteReport run_suite(std::span<const double> qs);

}  // namespace qgauss

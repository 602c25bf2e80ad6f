#include "qgauss/qseries.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qgauss/error.hpp"

namespace qgauss {

QParameter::QParameter(double q) : q_(q) {
  if (!(q >= -1.0 && q <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "q must lie in [-1, 1], got " + std::to_string(q));
  }
  if (q == -1.0) {
    kind_ = QKind::TwoPoint;
    halfwidth_ = 1.0;
  } else if (q == 1.0) {
    kind_ = QKind::Normal;
    halfwidth_ = std::numeric_limits<double>::infinity();
  } else {
    kind_ = QKind::Continuous;
    halfwidth_ = 2.0 / std::sqrt(1.0 - q);
  }
}

double q_number(int n, double q) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "q_number needs n >= 0");
  }
  double sum = 0.0;
  double power = 1.0;
  for (int i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

double q_factorial(int n, double q) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "q_factorial needs n >= 0");
  }
  double product = 1.0;
  for (int i = 1; i <= n; ++i) product *= q_number(i, q);
  return product;
}

double q_binomial(int n, int k, double q) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "q_binomial needs n >= 0");
  }
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  // Row of the q-Pascal triangle: [m, j] = [m-1, j-1] + q^j [m-1, j].
  std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
  row[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    const int top = std::min(m, k);
    for (int j = top; j >= 1; --j) {
      row[j] = row[j - 1] + std::pow(q, j) * row[j];
    }
  }
  return row[k];
}

double pochhammer(double a, double q, int n) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "pochhammer needs n >= 0");
  }
  double product = 1.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    product *= 1.0 - a * power;
    power *= q;
  }
  return product;
}

int infinite_product_cutoff(double dominance, double q, double eps) {
  const double r = std::abs(q);
  if (r >= 1.0) {
    throw Error(ErrorKind::NonConvergent,
                "infinite product needs |q| < 1");
  }
  if (dominance == 0.0 || r == 0.0) return 1;
  int k = 0;
  double head = dominance;  // dominance * |q|^k
  while (head / (1.0 - r) >= eps || head >= 0.5) {
    head *= r;
    ++k;
    if (head == 0.0) break;
  }
  return std::max(k, 1);
}

double pochhammer_infinite(double a, double q, const TruncationPolicy& policy) {
  if (std::abs(q) >= 1.0) {
    throw Error(ErrorKind::NonConvergent,
                "(a; q)_inf diverges for |q| >= 1");
  }
  const int cutoff = infinite_product_cutoff(std::abs(a), q, policy.epsilon);
  return pochhammer(a, q, cutoff);
}

namespace {

void require_nome(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::NonConvergent,
                "theta functions need a nome in (0, 1)");
  }
}

}  // namespace

// Triple-product form; 1 + 2a cos(2 pi z) + a^2 is kept as (1 - a)^2 + 4a cos^2(pi z).
namespace {

double theta_product(double q, double c2, int first_power,
                     const TruncationPolicy& policy) {
  double prod = 1.0;
  for (int n = 1;; ++n) {
    const double even = std::pow(q, 2.0 * n);
    const double a = std::pow(q, 2.0 * n - 1 + first_power);
    prod *= (1.0 - even) * ((1.0 - a) * (1.0 - a) + 4.0 * a * c2);
    if (4.0 * a / (1.0 - q) < policy.epsilon * 1e-3) break;
  }
  return prod;
}

}  // namespace

double theta3(double z, double q, const TruncationPolicy& policy) {
  require_nome(q);
  const double c = std::cos(std::numbers::pi * z);
  return theta_product(q, c * c, 0, policy);
}

double theta2(double z, double q, const TruncationPolicy& policy) {
  require_nome(q);
  const double c = std::cos(std::numbers::pi * z);
  return 2.0 * std::pow(q, 0.25) * c * theta_product(q, c * c, 1, policy);
}

}  // namespace qgauss

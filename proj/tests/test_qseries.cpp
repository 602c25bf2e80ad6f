#include <cmath>

#include <doctest.h>

#include "qgauss/error.hpp"
#include "qgauss/qseries.hpp"

using namespace qgauss;

TEST_CASE("QParameter classifies q") {
  CHECK(QParameter(-1.0).kind() == QKind::TwoPoint);
  CHECK(QParameter(1.0).kind() == QKind::Normal);
  CHECK(QParameter(0.3).kind() == QKind::Continuous);
  CHECK(QParameter(0.0).support_halfwidth() == doctest::Approx(2.0));
  CHECK(QParameter(0.5).support_halfwidth() == doctest::Approx(2.0 / std::sqrt(0.5)));
  CHECK(std::isinf(QParameter(1.0).support_halfwidth()));
  CHECK(QParameter(-1.0).support_halfwidth() == 1.0);

  CHECK_THROWS_AS(QParameter(1.5), Error);
  CHECK_THROWS_AS(QParameter(-1.0000001), Error);
  CHECK_THROWS_AS(QParameter(std::nan("")), Error);
  try {
    QParameter bad(2.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("q-numbers and q-factorials") {
  CHECK(q_number(3, 0.5) == doctest::Approx(1.75));
  CHECK(q_number(7, 1.0) == 7.0);
  CHECK(q_number(0, 0.4) == 0.0);
  CHECK(q_number(4, -1.0) == 0.0);
  CHECK(q_number(5, -1.0) == 1.0);

  CHECK(q_factorial(0, 0.7) == 1.0);
  CHECK(q_factorial(3, 0.0) == 1.0);
  CHECK(q_factorial(3, 1.0) == 6.0);
  CHECK(q_factorial(10, 1.0) == 3628800.0);
  // [4]_q! at q = 0.5: 1 * 1.5 * 1.75 * 1.875
  CHECK(q_factorial(4, 0.5) == doctest::Approx(4.921875).epsilon(1e-15));
}

TEST_CASE("q-binomial") {
  const double q = 0.37;
  CHECK(q_binomial(2, 1, q) == doctest::Approx(1 + q));
  CHECK(q_binomial(4, 2, 1.0) == 6.0);
  CHECK(q_binomial(3, 5, q) == 0.0);
  CHECK(q_binomial(3, -1, q) == 0.0);
  CHECK(q_binomial(5, 0, q) == 1.0);
  CHECK(q_binomial(16, 8, 1.0) == 12870.0);

  SUBCASE("symmetry and the factorial ratio") {
    for (double x : {-0.9, -0.3, 0.0, 0.45, 0.99}) {
      for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
          const double b = q_binomial(n, k, x);
          CHECK(b == doctest::Approx(q_binomial(n, n - k, x)).epsilon(1e-13));
          if (x != 0.0) {
            const double ratio =
                q_factorial(n, x) / (q_factorial(k, x) * q_factorial(n - k, x));
            CHECK(b == doctest::Approx(ratio).epsilon(1e-11));
          }
        }
      }
    }
  }
}

TEST_CASE("Pochhammer symbols") {
  CHECK(pochhammer(0.5, 0.5, 2) == doctest::Approx(0.375));
  CHECK(pochhammer(0.123, 0.8, 0) == 1.0);

  SUBCASE("(a;q)_{m+n} = (a;q)_m (a q^m; q)_n") {
    for (double q : {-0.7, 0.2, 0.9}) {
      for (double a : {-0.4, 0.3, 1.7}) {
        for (int m = 0; m <= 6; ++m) {
          for (int n = 0; n <= 6; ++n) {
            CHECK(pochhammer(a, q, m + n) ==
                  doctest::Approx(pochhammer(a, q, m) *
                                  pochhammer(a * std::pow(q, m), q, n))
                      .epsilon(1e-12));
          }
        }
      }
    }
  }

  SUBCASE("infinite products") {
    const TruncationPolicy tight{1e-16, 1000, 0};
    // Euler: (q;q)_inf at q = 0.5, 40-digit reference
    CHECK(pochhammer_infinite(0.5, 0.5, tight) ==
          doctest::Approx(0.28878809508660242128).epsilon(1e-15));
    CHECK(pochhammer_infinite(0.3, 0.0, tight) == doctest::Approx(0.7));
    CHECK_THROWS_AS(pochhammer_infinite(0.5, 1.0, tight), Error);
    CHECK_THROWS_AS(pochhammer_infinite(0.5, -1.0, tight), Error);
    // Finite product with enough factors agrees with the infinite one.
    CHECK(pochhammer_infinite(-0.6, 0.6, tight) ==
          doctest::Approx(pochhammer(-0.6, 0.6, 200)).epsilon(1e-14));
  }
}

TEST_CASE("theta functions") {
  const TruncationPolicy tight{1e-16, 1000, 0};
  CHECK(theta3(0.0, 0.1, tight) == doctest::Approx(1.2002000020000002).epsilon(1e-15));

  SUBCASE("product form agrees with the Fourier series") {
    for (double q : {0.05, 0.4, 0.8}) {
      for (double z : {-0.3, 0.0, 0.17, 0.45}) {
        double s3 = 1.0;
        double s2 = 0.0;
        for (int n = 0; n < 200; ++n) {
          if (n > 0) s3 += 2.0 * std::pow(q, n * n) * std::cos(2.0 * M_PI * n * z);
          s2 += 2.0 * std::pow(q, (n + 0.5) * (n + 0.5)) *
                std::cos((2 * n + 1) * M_PI * z);
        }
        CHECK(theta3(z, q, tight) == doctest::Approx(s3).epsilon(1e-13));
        CHECK(theta2(z, q, tight) == doctest::Approx(s2).epsilon(1e-12));
      }
    }
  }
  CHECK(theta2(0.5, 0.3, tight) == doctest::Approx(0.0));
  CHECK_THROWS_AS(theta3(0.0, 0.0, tight), Error);
  CHECK_THROWS_AS(theta2(0.0, 1.0, tight), Error);
}

TEST_CASE("infinite product cutoff") {
  CHECK(infinite_product_cutoff(1.0, 0.0, 1e-12) >= 1);
  const int k = infinite_product_cutoff(1.0, 0.5, 1e-12);
  CHECK(std::pow(0.5, k) / 0.5 < 1e-12);
  CHECK(std::pow(0.5, k - 1) / 0.5 >= 1e-12);
}

#include <cmath>
#include <vector>

#include <doctest.h>

#include "qgauss/error.hpp"
#include "qgauss/polynomials.hpp"
#include "qgauss/qseries.hpp"

using namespace qgauss;

TEST_CASE("Chebyshev U values") {
  CHECK(chebyshev_u(2, 0.0) == -1.0);
  CHECK(chebyshev_u(-1, 0.3) == 0.0);
  CHECK(chebyshev_u(0, 0.3) == 1.0);
  for (int k = 0; k <= 20; ++k) CHECK(chebyshev_u(2 * k, 1.0) == 2 * k + 1);
  const double cycle[3] = {1.0, 0.0, -1.0};
  for (int n = 0; n <= 30; ++n) {
    CHECK(chebyshev_u(2 * n, 0.5) == doctest::Approx(cycle[n % 3]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(chebyshev_u(-2, 0.1), Error);
}

TEST_CASE("Chebyshev U recurrence matches the trigonometric form") {
  for (double x : {-0.999, -0.5, -0.1, 0.0, 0.33, 0.71, 0.98}) {
    const auto seq = chebyshev_u_sequence(40, x);
    REQUIRE(seq.size() == 41);
    for (int n = 0; n <= 40; ++n) {
      CHECK(chebyshev_u(n, x) == doctest::Approx(chebyshev_u_trig(n, x)).epsilon(1e-11));
      CHECK(seq[n] == chebyshev_u(n, x));
    }
  }
}

TEST_CASE("q-Hermite polynomials") {
  CHECK(q_hermite(2, 0.0, 0.4) == -1.0);
  CHECK(q_hermite(3, 1.0, 0.5) == doctest::Approx(-1.5));
  CHECK(q_hermite(0, 5.0, 0.1) == 1.0);
  CHECK(q_hermite(-1, 5.0, 0.1) == 0.0);

  SUBCASE("closed forms for low degree") {
    for (double q : {-0.8, 0.0, 0.6, 1.0}) {
      for (double x : {-1.3, 0.2, 2.1}) {
        CHECK(q_hermite(3, x, q) == doctest::Approx(x * x * x - (2 + q) * x));
        const double h4 = x * x * x * x - (3 + 2 * q + q * q) * x * x + (1 + q + q * q);
        CHECK(q_hermite(4, x, q) == doctest::Approx(h4));
      }
    }
  }

  SUBCASE("q = 0 reduces to Chebyshev U of x/2") {
    for (int n = 0; n <= 12; ++n) {
      CHECK(q_hermite(n, 0.7, 0.0) == doctest::Approx(chebyshev_u(n, 0.35)));
    }
  }
}

TEST_CASE("continuous q-Hermite polynomials") {
  CHECK(continuous_q_hermite(1, 0.3, 0.2) == doctest::Approx(0.6));
  CHECK(continuous_q_hermite(2, 0.0, 0.5) == doctest::Approx(-0.5));
  // h_n(t|q) = (1-q)^{n/2} H_n(2t/sqrt(1-q) | q)
  for (double q : {-0.6, 0.3, 0.9}) {
    for (int n = 0; n <= 9; ++n) {
      const double t = 0.41;
      const double rescaled =
          std::pow(1 - q, n / 2.0) * q_hermite(n, 2 * t / std::sqrt(1 - q), q);
      CHECK(continuous_q_hermite(n, t, q) == doctest::Approx(rescaled).epsilon(1e-12));
    }
  }
}

TEST_CASE("family dispatch and grids") {
  CHECK(evaluate(PolynomialFamily::ChebyshevU, 3, 0.2) == doctest::Approx(chebyshev_u(3, 0.2)));
  CHECK(evaluate(PolynomialFamily::QHermite, 3, 1.0, 0.5) == doctest::Approx(-1.5));
  CHECK(evaluate(PolynomialFamily::ContinuousQHermite, 1, 0.3, 0.2) == doctest::Approx(0.6));
  const std::vector<double> xs{-0.5, 0.0, 0.5};
  const auto ys = evaluate_grid(PolynomialFamily::QHermite, 2, xs, 0.3);
  REQUIRE(ys.size() == 3);
  CHECK(ys[0] == doctest::Approx(-0.75));
  CHECK(ys[1] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(q_hermite(-3, 0.0, 0.1), Error);
}

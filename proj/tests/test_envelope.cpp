#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qgauss/distribution.hpp"
#include "qgauss/envelope.hpp"
#include "qgauss/error.hpp"
#include "qgauss/validation.hpp"

using namespace qgauss;
using doctest::Approx;

TEST_CASE("envelope at q = 0 is the semicircle") {
  CHECK(envelope_kernel(0.0, 0.0) == Approx(1 / std::numbers::pi).epsilon(1e-15));
  CHECK(envelope_mass(0.0) == Approx(1.0).epsilon(1e-15));
  for (double x : {-1.5, 0.2, 1.9}) {
    const double semi = 0.5 + std::asin(x / 2) / std::numbers::pi +
                        x * std::sqrt(4 - x * x) / (4 * std::numbers::pi);
    CHECK(envelope_cdf(x, 0.0) == Approx(semi).epsilon(1e-14));
  }
}

TEST_CASE("envelope mass") {
  // Symbolic integral of the kernel, evaluated at 30 digits.
  const double qs[] = {-0.8, -0.6, -0.4, 0.4, 0.6, 0.8};
  const double mass[] = {2.602414876026343, 1.9947648225270784, 1.562146396694985,
                         0.7589537711773916, 0.7462452972470859, 0.7667507795770621};
  for (int i = 0; i < 6; ++i) {
    CHECK(envelope_mass(qs[i]) == Approx(mass[i]).epsilon(1e-13));
    const double q = qs[i];
    CHECK(integrate([&](double x) { return envelope_kernel(x, q); }, q) ==
          Approx(mass[i]).epsilon(1e-12));
    CHECK(integrate([&](double x) { return envelope_pdf(x, q); }, q) ==
          Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("envelope distribution function") {
  CHECK(envelope_cdf(0.4, 0.6) == Approx(0.63045030637532200).epsilon(1e-13));
  CHECK(envelope_cdf(-1.0, -0.8) == Approx(0.27072065632987223).epsilon(1e-13));
  CHECK(envelope_cdf(2.0, 0.8) == Approx(0.91037586014922767).epsilon(1e-13));
  for (double q : {-0.9, -0.3, 0.5}) {
    const Envelope env(q);
    CHECK(env.cdf(0.0) == Approx(0.5).epsilon(1e-15));
    CHECK(env.cdf(env.halfwidth()) == Approx(1.0));
    CHECK(env.cdf(-env.halfwidth()) == Approx(0.0));
    CHECK(env.pdf(env.halfwidth()) == 0.0);
    // Derivative of the cdf is the pdf.
    for (double t : {-0.8, -0.3, 0.1, 0.6}) {
      const double x = t * env.halfwidth();
      const double h = 1e-5;
      CHECK((env.cdf(x + h) - env.cdf(x - h)) / (2 * h) == Approx(env.pdf(x)).epsilon(1e-7));
    }
    for (double u : {1e-6, 0.2, 0.5, 0.77, 1 - 1e-6}) {
      CHECK(env.cdf(env.inverse(u)) == Approx(u).epsilon(1e-11));
    }
    CHECK(env.inverse(0.5) == Approx(0.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(Envelope(1.0), Error);
}

TEST_CASE("rejection bound") {
  CHECK(rejection_bound(0.0) == 1.0);
  // 200-factor product oracle.
  const TruncationPolicy tight{1e-16, 1000, 0};
  CHECK(rejection_bound(0.5, tight) == Approx(1.4268917088251464).epsilon(1e-14));
  CHECK(rejection_bound(-0.5, tight) == Approx(0.71033485962335294).epsilon(1e-14));
  CHECK(rejection_bound(0.6, tight) == Approx(1.5233329810535597).epsilon(1e-14));
  CHECK(rejection_bound(-0.6, tight) == Approx(0.89838190716539960).epsilon(1e-14));
  CHECK(rejection_bound(-0.8, tight) == Approx(11.333712718276081).epsilon(1e-13));
  CHECK(rejection_bound(-0.85, tight) == Approx(87.251166821155898).epsilon(1e-13));
  CHECK(rejection_bound(-0.95, tight) == Approx(1.7598e9).epsilon(1e-4));
  CHECK(rejection_bound(-0.5) < rejection_bound(-0.7));
  CHECK(rejection_bound(-0.7) < rejection_bound(-0.85));
}

TEST_CASE("envelope dominates the density") {
  for (double q : {-0.8, -0.4, 0.4, 0.8}) {
    const QParameter qp(q);
    const Envelope env(q);
    const double m = rejection_bound(q);
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = -env.halfwidth() + 2 * env.halfwidth() * i / 2000;
      const double k = env.kernel(x);
      if (k > 0) worst = std::max(worst, pdf_product(x, qp, {1e-15, 1000, 0}).value / k);
    }
    CHECK(worst <= m * (1 + 1e-9));
  }
}

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "qgauss/distribution.hpp"
#include "qgauss/error.hpp"
#include "qgauss/report_json.hpp"
#include "qgauss/sampler.hpp"
#include "qgauss/validation.hpp"

using namespace qgauss;
using doctest::Approx;

TEST_CASE("compare sets passed from the tolerance") {
  const auto ok = compare("a", 1.0, 1.0 + 1e-12, 1e-11);
  CHECK(ok.passed);
  CHECK(ok.abs_error == Approx(1e-12));
  const auto bad = compare("b", 1.0, 2.0, 0.5, false);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.gated);
}

TEST_CASE("Gauss-Legendre rule") {
  const auto& rule = gauss_legendre(16);
  REQUIRE(rule.nodes.size() == 16);
  double w = 0;
  for (double x : rule.weights) w += x;
  CHECK(w == Approx(2.0).epsilon(1e-14));
  // Exact for degree 31.
  double s = 0;
  for (std::size_t i = 0; i < 16; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 30);
  CHECK(s == Approx(2.0 / 31).epsilon(1e-13));
}

TEST_CASE("integration over the support") {
  CHECK(integrate([](double x) { return std::sqrt(std::max(0.0, 4 - x * x)) / (2 * std::numbers::pi); }, 0.0) ==
        Approx(1.0).epsilon(1e-12));
  for (double q : {-0.7, 0.2, 0.9}) {
    const QGaussian law{QParameter(q)};
    CHECK(std::abs(integrate([&](double x) { return x * law.pdf(x); }, q)) < 1e-12);
    const auto f = [&](double x) { return x * x * x * x * x * x * law.pdf(x); };
    CHECK(std::abs(integrate(f, q, 256) - integrate(f, q, 512)) < 1e-10);
  }
  const QGaussian law{QParameter(0.3)};
  CHECK(integrate([&](double x) { return std::pow(x, 4) * law.pdf(x); }, 0.3) == Approx(2.3).epsilon(1e-9));
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0), Error);
}

TEST_CASE("identity checks") {
  for (double q : {0.5, -0.3}) CHECK(check_triple_product(q).abs_error <= 1e-12);
  const auto zero = check_triple_product(0.0);
  CHECK(zero.lhs == Approx(1.0));
  CHECK(zero.rhs == Approx(1.0));
  CHECK(check_cubed_euler(0.3).abs_error <= 1e-10);
  for (double q : {-0.6, -0.3, 0.3, 0.6, 0.9}) {
    CHECK(check_triple_product(q).passed);
    CHECK(check_q3(q).passed);
    CHECK(check_cubed_euler(q).passed);
  }
  for (double q : {-0.7, -0.3, 0.3, 0.7, 1.0}) {
    for (int n = 1; n <= 8; ++n) CHECK(check_qbinomial_sum(n, q).passed);
  }
  const auto one = check_qbinomial_sum(1, 0.4);
  CHECK(one.lhs == Approx(1.4));
  CHECK(one.rhs == Approx(1.4));
  CHECK(check_qbinomial_sum(8, 1.0).lhs == Approx(12870.0));
}

TEST_CASE("tail lemma") {
  for (double r : {0.5, 0.9, 0.99}) {
    for (int n : {3, 5, 10}) CHECK(check_tail_lemma(r, n).passed);
  }
  CHECK_THROWS_AS(check_tail_lemma(1.0, 3), Error);
  CHECK_THROWS_AS(check_tail_lemma(0.5, 2), Error);
}

TEST_CASE("theta representation") {
  const auto grid = default_theta_grid();
  const auto t = check_theta_form(0.4, grid);
  CHECK(t.constancy.passed);
  CHECK(t.constancy.lhs < 1e-9);
  CHECK(t.constant.lhs == Approx(0.10558323556134786).epsilon(1e-9));
  CHECK_FALSE(t.constant.gated);
  const double z0[] = {0.0};
  const auto at_zero = check_theta_form(0.4, z0);
  CHECK(at_zero.constant.lhs ==
        Approx(pdf_product(0.0, QParameter(0.4), identity_policy()).value /
               (theta3(0.0, 0.4, identity_policy()) * theta2(0.0, 0.4, identity_policy()))));
}

TEST_CASE("form equivalence check") {
  for (double q : {-0.9, -0.5, 0.5, 0.9}) {
    CHECK(check_form_equivalence(q, {1e-10, 1000, 0}).passed);
    CHECK(check_form_equivalence(q, {1e-10, 1000, 0}).lhs <= 1e-10);
    CHECK(check_form_equivalence(q, {1e-10, 1000, 4}).passed);
  }
}

TEST_CASE("KS statistic") {
  const QGaussian law{QParameter(0.2)};
  const int n = 200;
  std::vector<double> exact;
  for (int i = 1; i <= n; ++i) exact.push_back(law.quantile((i - 0.5) / n));
  CHECK(ks_statistic(exact, [&](double x) { return law.cdf(x); }) == Approx(0.5 / n).epsilon(1e-8));

  SampleStream s(1000, 0);
  std::vector<double> u;
  for (int i = 0; i < 1000; ++i) u.push_back(s.next_uniform());
  std::sort(u.begin(), u.end());
  CHECK(ks_statistic(u, [](double x) { return x; }) < ks_critical_value(1000));
  CHECK(ks_critical_value(2000) == Approx(0.0364).epsilon(1e-3));

  const std::vector<double> constant(50, 0.5);
  CHECK(ks_statistic(constant, [](double x) { return std::clamp(x, 0.0, 1.0); }) == Approx(0.5));
  const std::vector<double> degenerate(50, 3.0);
  CHECK(ks_statistic(degenerate, [&](double x) { return law.cdf(x); }) == Approx(1.0));
  CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, [](double x) { return x; }), Error);
  CHECK_THROWS_AS(ks_statistic(std::vector<double>{2.0, 1.0}, [](double x) { return x; }), Error);
}

TEST_CASE("suite summary") {
  const double qs[] = {0.3};
  const auto report = run_suite(qs);
  CHECK(report.total == static_cast<int>(report.checks.size()));
  CHECK(report.failed == 0);
  CHECK(report.ok());
  CHECK(report.passed + report.failed + report.informational_failed == report.total);
}

TEST_CASE("JSON reports") {
  const auto c = compare("x", 1.0, std::nan(""), 1e-3);
  const auto j = to_json(c);
  CHECK(j["name"] == "x");
  CHECK(j["rhs"].is_null());
  CHECK(j["passed"] == false);

  SampleStream s(1, 0);
  const auto r = sample(10, QParameter(0.4), SamplingMethod::Rejection, s);
  const auto without = to_json(r, false);
  CHECK_FALSE(without.contains("elapsed_seconds"));
  CHECK(to_json(r, true).contains("elapsed_seconds"));
  CHECK(without["method"] == "rejection");
  CHECK(without["n"] == 10);

  const auto e = error_json("NonConvergent", "boom");
  CHECK(e["error"]["kind"] == "NonConvergent");
}

// qgauss: tabulate, sample and validate the q-Gaussian distribution.
//
// Exit status: 0 on success, 1 on a computation error (a JSON error object is
// written to stdout), 2 on a usage error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgauss/distribution.hpp"
#include "qgauss/envelope.hpp"
#include "qgauss/error.hpp"
#include "qgauss/report_json.hpp"
#include "qgauss/sampler.hpp"
#include "qgauss/validation.hpp"

namespace {

using qgauss::Error;
using qgauss::ErrorKind;

constexpr int kDefaultMaxTerms = 1000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// A:B:N -> N equally spaced points from A to B inclusive.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) {
    throw UsageError("grid must look like A:B:N, got '" + text + "'");
  }
  double a = 0.0;
  double b = 0.0;
  long n = 0;
  try {
    std::size_t used = 0;
    a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("a");
    b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("b");
    n = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("n");
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse grid '" + text + "'");
  }
  if (!std::isfinite(a) || !std::isfinite(b) || n < 1 || n > 10'000'000) {
    throw UsageError("grid needs finite ends and 1 <= N <= 1e7");
  }
  std::vector<double> xs;
  for (long i = 0; i < n; ++i) {
    xs.push_back(n == 1 ? a : (i == n - 1 ? b : a + (b - a) * i / (n - 1)));
  }
  return xs;
}

int max_terms_from_env() {
  const char* raw = std::getenv("QGAUSS_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxTerms;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0 || v > 1'000'000) {
    throw UsageError("QGAUSS_MAX_TERMS must be a positive integer");
  }
  return static_cast<int>(v);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// --q must be a real number in [-1, 1]; NaN is rejected.
const CLI::Validator kQRange(
    [](std::string& s) -> std::string {
      try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !(v >= -1.0 && v <= 1.0)) {
          return "q must be a number in [-1, 1]";
        }
      } catch (const std::logic_error&) {
        return "q must be a number in [-1, 1]";
      }
      return {};
    },
    "in [-1, 1]");

struct Options {
  double q = 0.0;
  std::vector<double> qs;
  std::string grid;
  std::string form = "expansion";
  std::string which = "pdf";
  std::string method = "auto";
  std::string output;
  std::string report;
  double eps = 1e-12;
  int max_order = 10;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  unsigned lanes = 1;
  bool json = false;
  bool timing = false;
};

qgauss::TruncationPolicy make_policy(const Options& o) {
  if (!(o.eps > 0.0)) throw UsageError("--eps must be positive");
  return qgauss::TruncationPolicy{o.eps, max_terms_from_env(), 0};
}

int run_pdf(const Options& o) {
  const qgauss::QParameter qp(o.q);
  const auto policy = make_policy(o);
  const auto xs = parse_grid(o.grid);
  if (o.form != "product" && o.form != "expansion") {
    throw UsageError("--form must be product or expansion");
  }
  std::ostringstream out;
  out << "x,value,error_bound\n";
  if (o.form == "expansion" && qp.is_continuous()) {
    const qgauss::QGaussian law(qp, policy);
    for (double x : xs) {
      const auto e = law.density(x);
      out << fmt(x) << ',' << fmt(e.value) << ',' << fmt(e.error_bound) << '\n';
    }
  } else {
    for (double x : xs) {
      const auto e = o.form == "product" ? qgauss::pdf_product(x, qp, policy)
                                         : qgauss::pdf_expansion(x, qp, policy);
      out << fmt(x) << ',' << fmt(e.value) << ',' << fmt(e.error_bound) << '\n';
    }
  }
  Output(o.output).stream() << out.str();
  return 0;
}

int run_cdf(const Options& o) {
  const qgauss::QParameter qp(o.q);
  const qgauss::QGaussian law(qp, make_policy(o));
  const auto xs = parse_grid(o.grid);
  const double bound =
      qp.is_continuous()
          ? qgauss::cdf_truncation_bound(o.q, law.cdf_policy().resolved_n)
          : 0.0;
  std::ostringstream out;
  out << "x,value,error_bound\n";
  for (double x : xs) {
    out << fmt(x) << ',' << fmt(law.cdf(x)) << ',' << fmt(bound) << '\n';
  }
  Output(o.output).stream() << out.str();
  return 0;
}

int run_quantile(const Options& o) {
  const qgauss::QParameter qp(o.q);
  const qgauss::QGaussian law(qp, make_policy(o));
  const auto ps = parse_grid(o.grid);
  for (double p : ps) {
    if (!(p > 0.0 && p < 1.0)) throw UsageError("quantile grid must lie in (0, 1)");
  }
  std::ostringstream out;
  out << "p,x\n";
  for (double p : ps) out << fmt(p) << ',' << fmt(law.quantile(p)) << '\n';
  Output(o.output).stream() << out.str();
  return 0;
}

int run_moments(const Options& o) {
  if (o.max_order < 0) throw UsageError("--max-order must be >= 0");
  std::ostringstream out;
  out << "r,moment\n";
  const auto m = qgauss::moments(o.max_order, o.q);
  for (std::size_t r = 0; r < m.size(); ++r) out << r << ',' << fmt(m[r]) << '\n';
  Output(o.output).stream() << out.str();
  return 0;
}

int run_sample(const Options& o) {
  const qgauss::QParameter qp(o.q);
  if (o.n == 0) throw UsageError("--n must be positive");
  if (o.lanes == 0) throw UsageError("--lanes must be positive");
  qgauss::SamplingMethod method;
  try {
    method = qgauss::parse_sampling_method(o.method);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto report = qgauss::sample_lanes(o.n, qp, method, o.seed, o.stream,
                                           o.lanes, make_policy(o));
  std::ostringstream values;
  for (double x : report.samples) values << fmt(x) << '\n';
  Output(o.output).stream() << values.str();

  const std::string sidecar = to_json(report, o.timing).dump(2) + "\n";
  std::string report_path = o.report;
  if (report_path.empty() && !o.output.empty()) report_path = o.output + ".json";
  if (report_path.empty()) {
    std::cerr << sidecar;
  } else {
    Output(report_path).stream() << sidecar;
  }
  return 0;
}

int run_terms(const Options& o) {
  if (o.which != "pdf" && o.which != "cdf") {
    throw UsageError("--which must be pdf or cdf");
  }
  if (!(o.eps > 0.0)) throw UsageError("--eps must be positive");
  if (!(std::abs(o.q) < 1.0)) {
    throw UsageError("terms needs |q| < 1");
  }
  const auto est = o.which == "pdf" ? qgauss::terms_for_tolerance_pdf(o.q, o.eps)
                                    : qgauss::terms_for_tolerance_cdf(o.q, o.eps);
  std::ostringstream out;
  out << "which,q,eps,root,n\n"
      << o.which << ',' << fmt(o.q) << ',' << fmt(o.eps) << ',' << fmt(est.root)
      << ',' << est.resolved_n << '\n';
  Output(o.output).stream() << out.str();
  return 0;
}

int run_validate(const Options& o) {
  std::vector<double> qs = o.qs.empty() ? qgauss::default_suite_q() : o.qs;
  for (double q : qs) {
    if (!(q >= -1.0 && q <= 1.0)) throw UsageError("every --q must be in [-1, 1]");
  }
  const auto report = qgauss::run_suite(qs);
  std::ostringstream out;
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      const char* status = c.passed ? "PASS" : (c.gated ? "FAIL" : "NOTE");
      out << status << "  " << c.name << "  |lhs-rhs|=" << fmt(c.abs_error)
          << "  tol=" << fmt(c.tolerance) << '\n';
    }
    out << "total=" << report.total << " passed=" << report.passed
        << " failed=" << report.failed
        << " informational_failed=" << report.informational_failed << '\n';
  }
  Output(o.output).stream() << out.str();
  return report.ok() ? 0 : 1;
}

int run_bench(const Options& o) {
  std::vector<double> qs = o.qs.empty() ? std::vector<double>{-0.8, -0.4, 0.0, 0.4, 0.8}
                                        : o.qs;
  if (o.n == 0) throw UsageError("--n must be positive");
  const auto policy = make_policy(o);
  std::ostringstream out;
  out << "q,method,n,draws_attempted,acceptance_rate,expected_acceptance,"
         "seconds,samples_per_second\n";
  for (double q : qs) {
    const qgauss::QParameter qp(q);
    std::vector<qgauss::SamplingMethod> methods;
    if (qp.is_continuous()) {
      // Rejection is hopeless once M(q) * mass explodes near q = -1.
      if (q >= -0.9) methods.push_back(qgauss::SamplingMethod::Rejection);
      methods.push_back(qgauss::SamplingMethod::CdfInversion);
      methods.push_back(qgauss::SamplingMethod::EnvelopeInversion);
    } else {
      methods.push_back(qgauss::SamplingMethod::Auto);
    }
    for (auto m : methods) {
      qgauss::SampleStream stream(o.seed, o.stream);
      const auto r = qgauss::sample(o.n, qp, m, stream, policy);
      const double secs = r.elapsed.count();
      out << fmt(q) << ',' << qgauss::to_string(r.method) << ',' << o.n << ','
          << r.draws_attempted << ',' << fmt(r.acceptance_rate) << ','
          << fmt(r.expected_acceptance) << ',' << fmt(secs) << ','
          << fmt(secs > 0.0 ? o.n / secs : 0.0) << '\n';
    }
  }
  Output(o.output).stream() << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Gaussian distribution: tabulation, sampling and validation"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "parameter q in [-1, 1]")->required()->check(kQRange);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };
  auto add_eps = [&](CLI::App* sub) {
    sub->add_option("--eps", o.eps, "absolute error target for the series")
        ->capture_default_str();
  };

  auto* pdf = app.add_subcommand("pdf", "tabulate the density on a grid");
  add_q(pdf);
  pdf->add_option("--grid", o.grid, "A:B:N (N points)")->required();
  pdf->add_option("--form", o.form, "product or expansion")->capture_default_str();
  add_eps(pdf);
  add_output(pdf);

  auto* cdf = app.add_subcommand("cdf", "tabulate the distribution function");
  add_q(cdf);
  cdf->add_option("--grid", o.grid, "A:B:N (N points)")->required();
  add_eps(cdf);
  add_output(cdf);

  auto* quant = app.add_subcommand("quantile", "tabulate quantiles on a p grid");
  add_q(quant);
  quant->add_option("--grid", o.grid, "A:B:N over p, inside (0, 1)")->required();
  add_eps(quant);
  add_output(quant);

  auto* mom = app.add_subcommand("moments", "moments E X^r, r = 0..R");
  add_q(mom);
  mom->add_option("--max-order", o.max_order, "largest order R")->capture_default_str();
  add_output(mom);

  auto* smp = app.add_subcommand("sample", "draw i.i.d. samples");
  add_q(smp);
  smp->add_option("--n", o.n, "number of samples")->required();
  smp->add_option("--seed", o.seed, "64-bit seed")->required();
  smp->add_option("--stream", o.stream, "first stream id")->capture_default_str();
  smp->add_option("--lanes", o.lanes, "worker lanes (distinct stream ids)")
      ->capture_default_str();
  smp->add_option("--method", o.method,
                  "auto|rejection|cdf-inversion|envelope-inversion|two-point|normal")
      ->capture_default_str();
  smp->add_option("--report", o.report, "path of the JSON sidecar");
  smp->add_flag("--timing", o.timing, "include elapsed time in the sidecar");
  add_eps(smp);
  add_output(smp);

  auto* val = app.add_subcommand("validate", "run the identity and consistency suite");
  val->add_option("--q", o.qs, "comma-separated q values")->delimiter(',');
  val->add_flag("--json", o.json, "emit the JSON report");
  add_output(val);

  auto* bench = app.add_subcommand("bench", "throughput and acceptance per method");
  bench->add_option("--q", o.qs, "comma-separated q values")->delimiter(',');
  bench->add_option("--n", o.n, "samples per method")->capture_default_str();
  bench->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  add_eps(bench);
  add_output(bench);

  auto* terms = app.add_subcommand("terms", "series length for a target error");
  add_q(terms);
  terms->add_option("--eps", o.eps, "target error")->required();
  terms->add_option("--which", o.which, "pdf or cdf")->capture_default_str();
  add_output(terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (pdf->parsed()) return run_pdf(o);
    if (cdf->parsed()) return run_cdf(o);
    if (quant->parsed()) return run_quantile(o);
    if (mom->parsed()) return run_moments(o);
    if (smp->parsed()) return run_sample(o);
    if (val->parsed()) return run_validate(o);
    if (bench->parsed()) return run_bench(o);
    if (terms->parsed()) return run_terms(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) {
      std::cerr << "usage error: " << e.what() << '\n';
      return 2;
    }
    std::cout << qgauss::error_json(qgauss::to_string(e.kind()), e.what()).dump()
              << '\n';
    return 1;
  }
  return 2;
}

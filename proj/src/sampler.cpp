#include "qgauss/sampler.hpp"

#include <cmath>
#include <future>
#include <numbers>

#include "qgauss/distribution.hpp"
#include "qgauss/envelope.hpp"
#include "qgauss/error.hpp"

namespace qgauss {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// The density inside the acceptance ratio is always evaluated this tightly.
constexpr double kRatioEpsilon = 1e-12;

using Clock = std::chrono::steady_clock;

void fill_rejection(std::size_t n, const QParameter& qp, SampleStream& stream,
                    const TruncationPolicy& policy, SamplerReport& report) {
  const double q = qp.value();
  TruncationPolicy ratio_policy = policy;
  ratio_policy.epsilon = kRatioEpsilon;
  ratio_policy.resolved_n = 0;
  const QGaussian law(qp, ratio_policy);
  const Envelope envelope(q);
  TruncationPolicy bound_policy;
  bound_policy.epsilon = 1e-16;
  const double bound = rejection_bound(q, bound_policy);

  report.rejection_bound = bound;
  report.expected_acceptance = 1.0 / (bound * envelope.mass());

  std::uint64_t draws = 0;
  while (report.samples.size() < n) {
    if (draws >= kMaxEnvelopeDraws) {
      throw Error(ErrorKind::NonConvergent,
                  "rejection sampler exceeded the envelope draw cap; use "
                  "cdf-inversion for q this close to -1");
    }
    const double x = envelope.inverse(stream.next_uniform());
    const double y = stream.next_uniform();
    ++draws;
    const double target = law.pdf(x);
    if (!(target > 0.0)) continue;
    // At q = 0 the envelope is the semicircle itself, so T is identically 1.
    const double t = q == 0.0 ? 1.0 : bound * envelope.kernel(x) / target;
    if (y * t <= 1.0) report.samples.push_back(x);
  }
  report.draws_attempted = draws;
  report.acceptance_rate =
      static_cast<double>(report.samples.size()) / static_cast<double>(draws);
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += kGolden;
  return splitmix64_mix(state);
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      key_(splitmix64_mix(seed ^ splitmix64_mix(stream_id + kGolden))) {}

std::uint64_t SampleStream::next_u64() {
  ++counter_;
  return splitmix64_mix(key_ + counter_ * kGolden);
}

double SampleStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::string_view to_string(SamplingMethod method) {
  switch (method) {
    case SamplingMethod::Auto:
      return "auto";
    case SamplingMethod::Rejection:
      return "rejection";
    case SamplingMethod::EnvelopeInversion:
      return "envelope-inversion";
    case SamplingMethod::CdfInversion:
      return "cdf-inversion";
    case SamplingMethod::TwoPoint:
      return "two-point";
    case SamplingMethod::NormalClosedForm:
      return "normal";
  }
  return "unknown";
}

SamplingMethod parse_sampling_method(std::string_view name) {
  for (auto m : {SamplingMethod::Auto, SamplingMethod::Rejection,
                 SamplingMethod::EnvelopeInversion,
                 SamplingMethod::CdfInversion, SamplingMethod::TwoPoint,
                 SamplingMethod::NormalClosedForm}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown sampling method '" + std::string(name) + "'");
}

SamplingMethod resolve_method(SamplingMethod method, const QParameter& qp) {
  if (method == SamplingMethod::Auto) {
    switch (qp.kind()) {
      case QKind::TwoPoint:
        return SamplingMethod::TwoPoint;
      case QKind::Normal:
        return SamplingMethod::NormalClosedForm;
      case QKind::Continuous:
        return qp.value() >= kAutoRejectionFloor ? SamplingMethod::Rejection
                                                 : SamplingMethod::CdfInversion;
    }
  }
  const bool ok = [&] {
    switch (method) {
      case SamplingMethod::TwoPoint:
        return qp.kind() == QKind::TwoPoint;
      case SamplingMethod::NormalClosedForm:
        return qp.kind() == QKind::Normal;
      case SamplingMethod::Rejection:
      case SamplingMethod::EnvelopeInversion:
        return qp.kind() == QKind::Continuous;
      case SamplingMethod::CdfInversion:
      case SamplingMethod::Auto:
        return true;
    }
    return false;
  }();
  if (!ok) {
    throw Error(ErrorKind::MethodMismatch,
                "method '" + std::string(to_string(method)) +
                    "' cannot sample q = " + std::to_string(qp.value()));
  }
  return method;
}

SamplerReport sample(std::size_t n, const QParameter& qp,
                     SamplingMethod method, SampleStream& stream,
                     const TruncationPolicy& policy) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument, "sample size must be positive");
  }
  const auto start = Clock::now();
  SamplerReport report;
  report.method = resolve_method(method, qp);
  report.q = qp.value();
  report.seed = stream.seed();
  report.first_stream = stream.stream_id();
  report.samples.reserve(n);

  switch (report.method) {
    case SamplingMethod::Rejection:
      fill_rejection(n, qp, stream, policy, report);
      break;
    case SamplingMethod::EnvelopeInversion: {
      const Envelope envelope(qp.value());
      for (std::size_t i = 0; i < n; ++i) {
        report.samples.push_back(envelope.inverse(stream.next_uniform()));
      }
      report.note = "draws from the envelope density, not from P_H(q)";
      break;
    }
    case SamplingMethod::CdfInversion: {
      const QGaussian law(qp, policy);
      for (std::size_t i = 0; i < n; ++i) {
        report.samples.push_back(law.quantile(stream.next_uniform()));
      }
      break;
    }
    case SamplingMethod::TwoPoint:
      for (std::size_t i = 0; i < n; ++i) {
        report.samples.push_back(stream.next_uniform() < 0.5 ? -1.0 : 1.0);
      }
      break;
    case SamplingMethod::NormalClosedForm:
      // Box-Muller, cosine branch: two uniforms per draw.
      for (std::size_t i = 0; i < n; ++i) {
        const double radius = std::sqrt(-2.0 * std::log(stream.next_uniform()));
        const double angle = 2.0 * std::numbers::pi * stream.next_uniform();
        report.samples.push_back(radius * std::cos(angle));
      }
      report.note = "Box-Muller (cosine branch)";
      break;
    case SamplingMethod::Auto:
      break;
  }
  if (report.method != SamplingMethod::Rejection) {
    report.draws_attempted = n;
    report.acceptance_rate = 1.0;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

SamplerReport sample_lanes(std::size_t n, const QParameter& qp,
                           SamplingMethod method, std::uint64_t seed,
                           std::uint64_t first_stream, unsigned lanes,
                           const TruncationPolicy& policy) {
  if (lanes == 0) {
    throw Error(ErrorKind::InvalidArgument, "lanes must be positive");
  }
  if (n < lanes) lanes = static_cast<unsigned>(n);
  if (lanes <= 1) {
    SampleStream stream(seed, first_stream);
    return sample(n, qp, method, stream, policy);
  }
  const auto start = Clock::now();
  std::vector<std::future<SamplerReport>> jobs;
  for (unsigned lane = 0; lane < lanes; ++lane) {
    const std::size_t share = n / lanes + (lane < n % lanes ? 1 : 0);
    jobs.push_back(std::async(std::launch::async, [=, &qp, &policy] {
      SampleStream stream(seed, first_stream + lane);
      return sample(share, qp, method, stream, policy);
    }));
  }
  SamplerReport merged;
  merged.q = qp.value();
  merged.seed = seed;
  merged.first_stream = first_stream;
  merged.lanes = lanes;
  merged.samples.reserve(n);
  for (auto& job : jobs) {
    SamplerReport part = job.get();
    merged.method = part.method;
    merged.rejection_bound = part.rejection_bound;
    merged.expected_acceptance = part.expected_acceptance;
    merged.note = part.note;
    merged.draws_attempted += part.draws_attempted;
    merged.samples.insert(merged.samples.end(), part.samples.begin(),
                          part.samples.end());
  }
  merged.acceptance_rate = static_cast<double>(merged.samples.size()) /
                           static_cast<double>(merged.draws_attempted);
  merged.elapsed = Clock::now() - start;
  return merged;
}

}  // namespace qgauss

#pragma once

// Exact samplers for P_H(q) driven by deterministic, splittable uniform
// streams.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgauss/qseries.hpp"

namespace qgauss {

/// SplitMix64 finaliser (Steele, Lea & Flood constants).
std::uint64_t splitmix64_mix(std::uint64_t z);

/// Advances a SplitMix64 state by the golden-ratio increment and returns the
/// mixed output, exactly like the reference generator.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Counter-based uniform stream. Draw i of stream (seed, id) is
///
///   key = mix(seed ^ mix(id + 0x9E3779B97F4A7C15))
///   u64 = mix(key + (i + 1) * 0x9E3779B97F4A7C15)
///   u   = ((u64 >> 11) + 0.5) * 2^-53          in (0, 1)
///
/// so the sequence depends only on (seed, id, i): bit-identical across runs
/// and platforms, and streams with different ids share no state.
/// A stream must not be used by two threads at once.
class SampleStream {
 public:
  static constexpr std::string_view kGenerator = "splitmix64-counter/v1";

  SampleStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t position() const noexcept { return counter_; }

  /// Fresh stream from the same seed with another id.
  SampleStream split(std::uint64_t stream_id) const {
    return SampleStream(seed_, stream_id);
  }

  std::uint64_t next_u64();
  double next_uniform();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

enum class SamplingMethod {
  Auto,
  Rejection,
  EnvelopeInversion,  // draws from the envelope only; diagnostic
  CdfInversion,
  TwoPoint,
  NormalClosedForm,
};

std::string_view to_string(SamplingMethod method);

/// Accepts the CLI spellings: auto, rejection, envelope-inversion,
/// cdf-inversion, two-point, normal.
SamplingMethod parse_sampling_method(std::string_view name);

/// Auto picks Rejection for q >= this and CdfInversion below it.
inline constexpr double kAutoRejectionFloor = -0.85;

/// Envelope draws allowed per sample() call before giving up.
inline constexpr std::uint64_t kMaxEnvelopeDraws = 100'000'000;

/// Replaces Auto by the concrete method for `qp` and throws
/// Error(MethodMismatch) when `method` cannot sample that kind of law.
SamplingMethod resolve_method(SamplingMethod method, const QParameter& qp);

struct SamplerReport {
  std::vector<double> samples;
  SamplingMethod method = SamplingMethod::Auto;
  double q = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t first_stream = 0;
  unsigned lanes = 1;
  std::uint64_t draws_attempted = 0;
  double acceptance_rate = 1.0;
  /// M(q) for Rejection, otherwise 0.
  double rejection_bound = 0.0;
  /// 1 / (M(q) * envelope mass) for Rejection, otherwise 1.
  double expected_acceptance = 1.0;
  std::chrono::duration<double> elapsed{0.0};
  std::string generator{SampleStream::kGenerator};
  std::string note;
};

/// Draws n values from P_H(q) (or from the envelope for EnvelopeInversion).
/// Throws Error(MethodMismatch), Error(TermBudgetExceeded) from the series
/// policy, or Error(NonConvergent) after kMaxEnvelopeDraws rejections.
SamplerReport sample(std::size_t n, const QParameter& qp,
                     SamplingMethod method, SampleStream& stream,
                     const TruncationPolicy& policy = {});

/// Splits n across `lanes` worker threads using streams first_stream,
/// first_stream + 1, ...; samples are concatenated by stream id, so the
/// result does not depend on scheduling.
SamplerReport sample_lanes(std::size_t n, const QParameter& qp,
                           SamplingMethod method, std::uint64_t seed,
                           std::uint64_t first_stream, unsigned lanes,
                           const TruncationPolicy& policy = {});

}  // namespace qgauss

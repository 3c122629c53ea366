#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pivotal/boolean_function.hpp"
#include "pivotal/configuration.hpp"

namespace pivotal {

/// Pinned generator: std::mt19937_64 seeded through std::seed_seq with
/// (seed low, seed high, stream low, stream high). Both algorithms are fixed
/// by the C++ standard, so streams are identical across platforms.
inline constexpr const char* kGeneratorId = "mt19937_64+seed_seq(seed,stream)/u53";

/// Samples are drawn in fixed-size chunks; chunk c uses substream c. The
/// estimate therefore does not depend on how chunks are spread over workers.
inline constexpr std::uint64_t kChunkSize = 4096;

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

/// Each coordinate is 1 iff u < p for u = (next() >> 11) · 2^-53.
Configuration sample_config(int n, double p, std::mt19937_64& rng);
void sample_into(Configuration& omega, double p, std::mt19937_64& rng);

struct SampleEstimate {
  double mean = 0.0;
  std::uint64_t samples = 0;
  /// Hoeffding half width for summands in [0, scale]:
  /// scale · sqrt(ln(2/δ) / (2m)).
  double half_width = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::string generator = kGeneratorId;
  std::string notes;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
  bool covers(double value) const { return lower() <= value && value <= upper(); }
};

double hoeffding_half_width(std::uint64_t m, double delta);

struct SamplingOptions {
  std::uint64_t samples = 100'000;
  double delta = 0.05;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Sample mean of f over i.i.d. P_p configurations.
SampleEstimate estimate_mean(const FunctionOracle& f, double p, const SamplingOptions& opts);

/// Fraction of samples where |f(ω^i) - f(ω_i)| = 1.
SampleEstimate estimate_influence(const FunctionOracle& f, int i, double p,
                                  const SamplingOptions& opts);

/// Mean pivotal-set size per sample, in [0, n]. With `coordinate_subsample`
/// = k, each sample inspects k coordinates drawn without replacement and
/// scales the count by n/k (still unbiased, still in [0, n]); the half width
/// is scaled by n in both modes.
SampleEstimate estimate_total_influence(const FunctionOracle& f, double p,
                                        const SamplingOptions& opts,
                                        std::optional<int> coordinate_subsample = std::nullopt);

}  // namespace pivotal

#include "pivotal/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pivotal {

namespace {

std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xFFFFFFFFu); }
std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(double p, const SamplingOptions& opts) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sampling needs p in [0,1]");
  if (opts.samples < 1) throw std::invalid_argument("sample count must be at least 1");
  if (!(opts.delta > 0.0 && opts.delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0,1)");
  }
}

// Runs `chunk_fn(rng, count)` for every chunk and returns the integer sums in
// chunk order. `chunk_fn` returns the chunk's integer total.
template <class ChunkFn>
std::uint64_t run_chunks(const SamplingOptions& opts, ChunkFn&& chunk_fn) {
  const std::uint64_t chunks = (opts.samples + kChunkSize - 1) / kChunkSize;
  std::vector<std::uint64_t> totals(chunks, 0);
  auto work = [&](std::uint64_t c) {
    auto rng = make_stream(opts.seed, c);
    const std::uint64_t count = std::min(kChunkSize, opts.samples - c * kChunkSize);
    totals[c] = chunk_fn(rng, count);
  };
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(opts.workers, 1, chunks));
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) work(c);
      });
    }
    for (auto& th : pool) th.join();
  }
  return std::accumulate(totals.begin(), totals.end(), std::uint64_t{0});
}

SampleEstimate finish(std::uint64_t total, double scale, const SamplingOptions& opts) {
  SampleEstimate est;
  est.samples = opts.samples;
  est.delta = opts.delta;
  est.seed = opts.seed;
  est.scale = scale;
  est.mean = static_cast<double>(total) / static_cast<double>(opts.samples);
  est.half_width = scale * hoeffding_half_width(opts.samples, opts.delta);
  return est;
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{lo32(seed), hi32(seed), lo32(stream), hi32(stream)};
  return std::mt19937_64(seq);
}

void sample_into(Configuration& omega, double p, std::mt19937_64& rng) {
  auto words = omega.mutable_words();
  std::fill(words.begin(), words.end(), 0);
  for (int i = 0; i < omega.arity(); ++i) {
    if (unit_draw(rng) < p) words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

Configuration sample_config(int n, double p, std::mt19937_64& rng) {
  Configuration omega(n);
  sample_into(omega, p, rng);
  return omega;
}

double hoeffding_half_width(std::uint64_t m, double delta) {
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(m)));
}

SampleEstimate estimate_mean(const FunctionOracle& f, double p, const SamplingOptions& opts) {
  validate(p, opts);
  const std::uint64_t total = run_chunks(opts, [&](std::mt19937_64& rng, std::uint64_t count) {
    Configuration omega(f.arity());
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      sample_into(omega, p, rng);
      ones += f(omega) ? 1 : 0;
    }
    return ones;
  });
  auto est = finish(total, 1.0, opts);
  est.notes = "mean of f; summands in [0,1]";
  return est;
}

SampleEstimate estimate_influence(const FunctionOracle& f, int i, double p,
                                  const SamplingOptions& opts) {
  validate(p, opts);
  if (i < 1 || i > f.arity()) throw std::out_of_range("coordinate out of range");
  const std::uint64_t total = run_chunks(opts, [&](std::mt19937_64& rng, std::uint64_t count) {
    Configuration omega(f.arity());
    std::uint64_t pivotal = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      sample_into(omega, p, rng);
      omega.set(i, true);
      const bool hi = f(omega);
      omega.set(i, false);
      const bool lo = f(omega);
      pivotal += hi != lo ? 1 : 0;
    }
    return pivotal;
  });
  auto est = finish(total, 1.0, opts);
  est.notes = "P(coordinate " + std::to_string(i) + " pivotal); summands in [0,1]";
  return est;
}

SampleEstimate estimate_total_influence(const FunctionOracle& f, double p,
                                        const SamplingOptions& opts,
                                        std::optional<int> coordinate_subsample) {
  validate(p, opts);
  const int n = f.arity();
  const int k = coordinate_subsample.value_or(n);
  if (k < 1 || k > n) throw std::invalid_argument("coordinate subsample must be in [1, n]");
  const std::uint64_t total = run_chunks(opts, [&](std::mt19937_64& rng, std::uint64_t count) {
    Configuration omega(n);
    std::vector<int> coords(static_cast<std::size_t>(n));
    std::uint64_t pivotal = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      sample_into(omega, p, rng);
      std::iota(coords.begin(), coords.end(), 1);
      if (k < n) {
        // Partial Fisher-Yates: the first k entries become a uniform k-subset.
        for (int j = 0; j < k; ++j) {
          const auto span = static_cast<std::uint64_t>(n - j);
          const auto pick = static_cast<std::size_t>(j) + static_cast<std::size_t>(rng() % span);
          std::swap(coords[static_cast<std::size_t>(j)], coords[pick]);
        }
      }
      for (int j = 0; j < k; ++j) {
        const int i = coords[static_cast<std::size_t>(j)];
        const bool original = omega.get(i);
        omega.set(i, true);
        const bool hi = f(omega);
        omega.set(i, false);
        const bool lo = f(omega);
        omega.set(i, original);
        pivotal += hi != lo ? 1 : 0;
      }
    }
    return pivotal;
  });
  auto est = finish(total, static_cast<double>(n), opts);
  est.mean *= static_cast<double>(n) / static_cast<double>(k);
  est.notes = k == n ? "pivotal count per sample over all n coordinates; half width scaled by n"
                     : "pivotal count over a random " + std::to_string(k) +
                           "-subset scaled by n/k; half width scaled by n";
  return est;
}

}  // namespace pivotal

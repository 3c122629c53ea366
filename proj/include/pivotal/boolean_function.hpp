#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pivotal/configuration.hpp"

namespace pivotal {

/// Boolean function f : {0,1}^n -> {0,1} stored as a bit-packed truth table.
///
/// Entry j of the table is f at the configuration with index j. The object is
/// immutable after construction; the monotonicity flag is computed lazily and
/// cached (write-once), the weight enumerator is computed at construction.
class BooleanFunction {
 public:
  /// `words` holds 2^n bits, least significant bit of word 0 first.
  BooleanFunction(int n, std::vector<std::uint64_t> words);

  /// Text of 2^n characters from {0,1}; character j is f at index j.
  static BooleanFunction from_bits(int n, std::string_view bits);

  template <class Fn>
  static BooleanFunction tabulate(int n, Fn&& fn) {
    std::vector<std::uint64_t> words(word_count(n), 0);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < size; ++x) {
      if (fn(x)) words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    return BooleanFunction(n, std::move(words));
  }

  BooleanFunction(const BooleanFunction& other);
  BooleanFunction(BooleanFunction&& other) noexcept;
  BooleanFunction& operator=(const BooleanFunction& other);
  BooleanFunction& operator=(BooleanFunction&& other) noexcept;
  ~BooleanFunction() = default;

  int arity() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

  bool operator()(std::uint64_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1U;
  }
  bool operator()(const Configuration& omega) const;

  std::uint64_t count_ones() const noexcept;

  /// f(ω_i) <= f(ω^i) for every ω and i. O(n 2^n) on first call, cached after.
  bool is_monotone() const;

  /// a_k = #{ω : f(ω)=1, |ω|=k}, k = 0..n.
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::string to_bits() const;

  bool operator==(const BooleanFunction& other) const noexcept {
    return n_ == other.n_ && words_ == other.words_;
  }

  static std::size_t word_count(int n);

 private:
  int n_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> weights_;
  // -1 unknown, 0 false, 1 true
  mutable std::atomic<int> monotone_{-1};
};

/// Evaluation procedure for arbitrary arity (no truth table).
class FunctionOracle {
 public:
  using Eval = std::function<bool(const Configuration&)>;

  FunctionOracle(int n, Eval eval, std::string origin);

  /// Wraps an exact table; the oracle then reads the table.
  static FunctionOracle from_table(BooleanFunction f, std::string origin = "table");

  int arity() const noexcept { return n_; }
  const std::string& origin() const noexcept { return origin_; }

  bool operator()(const Configuration& omega) const;

 private:
  int n_;
  Eval eval_;
  std::string origin_;
};

/// δ_i f(ω) = f(ω^i) - f(ω_i) ∈ {-1, 0, 1}.
int discrete_derivative(const BooleanFunction& f, int i, const Configuration& omega);
int discrete_derivative(const FunctionOracle& f, int i, const Configuration& omega);

/// Coordinates i (1-based, ascending) with f(ω^i) != f(ω_i).
std::vector<int> pivotal_set(const BooleanFunction& f, const Configuration& omega);
std::vector<int> pivotal_set(const FunctionOracle& f, const Configuration& omega);

/// |P(f, ω)| straight from the index, for the exhaustive loops.
int pivotal_count(const BooleanFunction& f, std::uint64_t index) noexcept;

inline bool is_monotone(const BooleanFunction& f) { return f.is_monotone(); }

std::vector<std::uint64_t> weight_enumerator(const BooleanFunction& f);

/// Throws CapExceeded when n is outside [1, kExactCap].
void require_exact(int n);

}  // namespace pivotal

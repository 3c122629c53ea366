#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pivotal {

/// Largest arity for which a full truth table is materialized.
inline constexpr int kExactCap = 24;

/// A point ω of {0,1}^n.
///
/// Coordinates are 1-based: ω(i) is bit (i-1) of the configuration index, so
/// ω(1) is the least significant bit. Arities above 64 are supported (oracle
/// regime) by spreading the bits over several 64-bit words; `index()` is only
/// meaningful when n <= 64.
///
/// The text form written by `from_string`/`to_string` lists ω(1) ω(2) ... ω(n)
/// from left to right, e.g. "110" has ω(1)=ω(2)=1 and ω(3)=0 (index 3).
class Configuration {
 public:
  explicit Configuration(int n);
  Configuration(int n, std::uint64_t index);

  static Configuration from_string(std::string_view bits);

  int arity() const noexcept { return n_; }
  std::uint64_t index() const;

  /// ω(i), 1 <= i <= n.
  bool get(int i) const;
  void set(int i, bool b);
  void flip(int i);

  /// Copy of ω with coordinate i forced to b (ω^i for b=1, ω_i for b=0).
  Configuration with(int i, bool b) const;

  /// Hamming weight |ω|.
  int weight() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  std::string to_string() const;

  bool operator==(const Configuration&) const = default;

 private:
  void check_coordinate(int i) const;

  int n_;
  std::vector<std::uint64_t> words_;
};

/// set_coordinate(ω, i, b): ω with ω(i) replaced by b.
Configuration set_coordinate(const Configuration& omega, int i, bool b);

namespace bits {

constexpr std::uint64_t mask(int i) noexcept { return std::uint64_t{1} << (i - 1); }

constexpr std::uint64_t set_coordinate(std::uint64_t index, int i, bool b) noexcept {
  return b ? (index | mask(i)) : (index & ~mask(i));
}

constexpr bool get(std::uint64_t index, int i) noexcept { return (index >> (i - 1)) & 1U; }

}  // namespace bits

}  // namespace pivotal

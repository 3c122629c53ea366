#include "pivotal/boolean_function.hpp"

#include <bit>
#include <stdexcept>

#include "pivotal/errors.hpp"

namespace pivotal {

namespace {

// Bits of a 64-bit word whose position has bit (i-1) clear, i = 1..6.
constexpr std::uint64_t kLowHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::vector<std::uint64_t> compute_weights(int n, const std::vector<std::uint64_t>& words) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t j = 0; j < words.size(); ++j) {
    std::uint64_t w = words[j];
    while (w != 0) {
      const auto b = static_cast<std::uint64_t>(std::countr_zero(w));
      w &= w - 1;
      ++a[static_cast<std::size_t>(std::popcount((j << 6) | b))];
    }
  }
  return a;
}

bool scan_monotone(int n, const std::vector<std::uint64_t>& words) {
  for (int i = 1; i <= n; ++i) {
    if (i <= 6) {
      const std::uint64_t low = kLowHalfMask[i - 1];
      const int shift = 1 << (i - 1);
      for (auto w : words) {
        if ((w & low & ~(w >> shift)) != 0) return false;
      }
    } else {
      const std::size_t stride = std::size_t{1} << (i - 7);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if ((j & stride) != 0) continue;
        if ((words[j] & ~words[j + stride]) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

void require_exact(int n) {
  if (n < 1) throw std::invalid_argument("arity must be positive");
  if (n > kExactCap) throw CapExceeded(n);
}

std::size_t BooleanFunction::word_count(int n) {
  require_exact(n);
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (words_.size() != word_count(n)) {
    throw std::invalid_argument("truth table length does not match 2^n");
  }
  if (n < 6) {
    const std::uint64_t live = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    if ((words_[0] & ~live) != 0) {
      throw std::invalid_argument("truth table has bits set beyond 2^n entries");
    }
  }
  weights_ = compute_weights(n_, words_);
}

BooleanFunction::BooleanFunction(const BooleanFunction& other)
    : n_(other.n_),
      words_(other.words_),
      weights_(other.weights_),
      monotone_(other.monotone_.load(std::memory_order_relaxed)) {}

BooleanFunction::BooleanFunction(BooleanFunction&& other) noexcept
    : n_(other.n_),
      words_(std::move(other.words_)),
      weights_(std::move(other.weights_)),
      monotone_(other.monotone_.load(std::memory_order_relaxed)) {}

BooleanFunction& BooleanFunction::operator=(const BooleanFunction& other) {
  if (this != &other) {
    n_ = other.n_;
    words_ = other.words_;
    weights_ = other.weights_;
    monotone_.store(other.monotone_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
  return *this;
}

BooleanFunction& BooleanFunction::operator=(BooleanFunction&& other) noexcept {
  n_ = other.n_;
  words_ = std::move(other.words_);
  weights_ = std::move(other.weights_);
  monotone_.store(other.monotone_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

BooleanFunction BooleanFunction::from_bits(int n, std::string_view bits) {
  require_exact(n);
  if (bits.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("expected " + std::to_string(std::size_t{1} << n) +
                                " table entries, got " + std::to_string(bits.size()));
  }
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t x = 0; x < bits.size(); ++x) {
    if (bits[x] == '1') {
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
    } else if (bits[x] != '0') {
      throw std::invalid_argument("table entry " + std::to_string(x) + " is not 0 or 1");
    }
  }
  return BooleanFunction(n, std::move(words));
}

bool BooleanFunction::operator()(const Configuration& omega) const {
  if (omega.arity() != n_) throw std::invalid_argument("configuration arity mismatch");
  return (*this)(omega.index());
}

std::uint64_t BooleanFunction::count_ones() const noexcept {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

bool BooleanFunction::is_monotone() const {
  int cached = monotone_.load(std::memory_order_acquire);
  if (cached < 0) {
    cached = scan_monotone(n_, words_) ? 1 : 0;
    monotone_.store(cached, std::memory_order_release);
  }
  return cached == 1;
}

std::string BooleanFunction::to_bits() const {
  std::string s(size(), '0');
  for (std::uint64_t x = 0; x < size(); ++x) {
    if ((*this)(x)) s[x] = '1';
  }
  return s;
}

FunctionOracle::FunctionOracle(int n, Eval eval, std::string origin)
    : n_(n), eval_(std::move(eval)), origin_(std::move(origin)) {
  if (n < 1) throw std::invalid_argument("oracle arity must be positive");
}

FunctionOracle FunctionOracle::from_table(BooleanFunction f, std::string origin) {
  const int n = f.arity();
  return FunctionOracle(
      n, [table = std::move(f)](const Configuration& omega) { return table(omega.index()); },
      std::move(origin));
}

bool FunctionOracle::operator()(const Configuration& omega) const {
  if (omega.arity() != n_) throw std::invalid_argument("configuration arity mismatch");
  return eval_(omega);
}

int discrete_derivative(const BooleanFunction& f, int i, const Configuration& omega) {
  if (omega.arity() != f.arity()) throw std::invalid_argument("configuration arity mismatch");
  return static_cast<int>(f(omega.with(i, true))) - static_cast<int>(f(omega.with(i, false)));
}

int discrete_derivative(const FunctionOracle& f, int i, const Configuration& omega) {
  return static_cast<int>(f(omega.with(i, true))) - static_cast<int>(f(omega.with(i, false)));
}

std::vector<int> pivotal_set(const BooleanFunction& f, const Configuration& omega) {
  if (omega.arity() != f.arity()) throw std::invalid_argument("configuration arity mismatch");
  std::vector<int> out;
  const std::uint64_t x = omega.index();
  for (int i = 1; i <= f.arity(); ++i) {
    if (f(bits::set_coordinate(x, i, true)) != f(bits::set_coordinate(x, i, false))) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> pivotal_set(const FunctionOracle& f, const Configuration& omega) {
  if (omega.arity() != f.arity()) throw std::invalid_argument("configuration arity mismatch");
  std::vector<int> out;
  Configuration probe = omega;
  for (int i = 1; i <= f.arity(); ++i) {
    const bool original = probe.get(i);
    probe.set(i, true);
    const bool hi = f(probe);
    probe.set(i, false);
    const bool lo = f(probe);
    probe.set(i, original);
    if (hi != lo) out.push_back(i);
  }
  return out;
}

int pivotal_count(const BooleanFunction& f, std::uint64_t index) noexcept {
  int count = 0;
  for (int i = 1; i <= f.arity(); ++i) {
    const std::uint64_t m = bits::mask(i);
    count += f(index | m) != f(index & ~m) ? 1 : 0;
  }
  return count;
}

std::vector<std::uint64_t> weight_enumerator(const BooleanFunction& f) {
  return {f.weights().begin(), f.weights().end()};
}

}  // namespace pivotal

#include "pivotal/configuration.hpp"

#include <bit>
#include <stdexcept>

#include "pivotal/errors.hpp"

namespace pivotal {

CapExceeded::CapExceeded(int n)
    : std::length_error("arity " + std::to_string(n) + " exceeds the exact cap of " +
                        std::to_string(kExactCap)),
      n_(n) {}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

Configuration::Configuration(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("configuration arity must be positive");
  words_.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
}

Configuration::Configuration(int n, std::uint64_t index) : Configuration(n) {
  if (n < 64 && (index >> n) != 0) {
    throw std::out_of_range("configuration index " + std::to_string(index) +
                            " out of range for n=" + std::to_string(n));
  }
  words_[0] = index;
}

Configuration Configuration::from_string(std::string_view bits) {
  Configuration c(static_cast<int>(bits.size()));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') {
      throw std::invalid_argument("configuration text must be 0/1 characters");
    }
    c.set(static_cast<int>(k) + 1, bits[k] == '1');
  }
  return c;
}

std::uint64_t Configuration::index() const {
  if (n_ > 64) throw std::logic_error("index() requires n <= 64");
  return words_[0];
}

void Configuration::check_coordinate(int i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("coordinate " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n_));
  }
}

bool Configuration::get(int i) const {
  check_coordinate(i);
  const auto b = static_cast<unsigned>(i - 1);
  return (words_[b >> 6] >> (b & 63)) & 1U;
}

void Configuration::set(int i, bool b) {
  check_coordinate(i);
  const auto k = static_cast<unsigned>(i - 1);
  const std::uint64_t m = std::uint64_t{1} << (k & 63);
  if (b) {
    words_[k >> 6] |= m;
  } else {
    words_[k >> 6] &= ~m;
  }
}

void Configuration::flip(int i) { set(i, !get(i)); }

Configuration Configuration::with(int i, bool b) const {
  Configuration c = *this;
  c.set(i, b);
  return c;
}

int Configuration::weight() const noexcept {
  int w = 0;
  for (auto word : words_) w += std::popcount(word);
  return w;
}

std::string Configuration::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i) {
    if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

Configuration set_coordinate(const Configuration& omega, int i, bool b) {
  return omega.with(i, b);
}

}  // namespace pivotal

#include "pivotal/generators.hpp"

#include <stdexcept>

namespace pivotal {

namespace {

// Tables for n <= 6 fit in one word; entry x of the arity-n table is bit x.
std::vector<std::uint64_t> monotone_tables(int n) {
  if (n == 0) return {0, 1};
  const auto lower = monotone_tables(n - 1);
  const int half = 1 << (n - 1);
  std::vector<std::uint64_t> out;
  for (auto g0 : lower) {
    for (auto g1 : lower) {
      if ((g0 & ~g1) == 0) out.push_back(g0 | (g1 << half));
    }
  }
  return out;
}

}  // namespace

std::vector<BooleanFunction> all_monotone(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("all_monotone supports 1 <= n <= 5");
  std::vector<BooleanFunction> out;
  for (auto t : monotone_tables(n)) out.emplace_back(n, std::vector<std::uint64_t>{t});
  return out;
}

BooleanFunction upward_closure(const BooleanFunction& f) {
  const int n = f.arity();
  std::vector<std::uint64_t> words(f.words().begin(), f.words().end());
  // Propagate ones along each coordinate from ω_i to ω^i.
  for (int i = 1; i <= n; ++i) {
    if (i <= 6) {
      const int shift = 1 << (i - 1);
      std::uint64_t low = 0;
      for (int b = 0; b < 64; ++b) {
        if (((b >> (i - 1)) & 1) == 0) low |= std::uint64_t{1} << b;
      }
      for (auto& w : words) w |= (w & low) << shift;
    } else {
      const std::size_t stride = std::size_t{1} << (i - 7);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if ((j & stride) == 0) words[j + stride] |= words[j];
      }
    }
  }
  if (n < 6) words[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  return BooleanFunction(n, std::move(words));
}

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> words(BooleanFunction::word_count(n));
  for (auto& w : words) w = rng();
  if (n < 6) words[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  return BooleanFunction(n, std::move(words));
}

BooleanFunction random_monotone(int n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  auto seeds = BooleanFunction::tabulate(n, [&](std::uint64_t) { return coin(rng); });
  return upward_closure(seeds);
}

}  // namespace pivotal

#pragma once

// Deliberately naive reference computations. Nothing here calls into the
// library's numeric code; tables are only read through operator().

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Table = std::function<bool(std::uint64_t)>;

inline bool bit(std::uint64_t x, int i) { return (x >> (i - 1)) & 1U; }

// Literal n-term product, one factor per coordinate.
inline double prob(std::uint64_t x, int n, double p) {
  double r = 1.0;
  for (int i = 1; i <= n; ++i) r *= bit(x, i) ? p : 1.0 - p;
  return r;
}

inline double expect(const std::function<double(std::uint64_t)>& g, int n, double p) {
  double s = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) s += g(x) * prob(x, n, p);
  return s;
}

inline double xi(std::uint64_t x, int i, double p) {
  return bit(x, i) ? 1.0 / p : -1.0 / (1.0 - p);
}

inline double sn(std::uint64_t x, int n, double p) {
  double s = 0.0;
  for (int i = 1; i <= n; ++i) s += xi(x, i, p);
  return s;
}

inline bool pivotal(const Table& f, std::uint64_t x, int i) {
  const std::uint64_t m = std::uint64_t{1} << (i - 1);
  return f(x | m) != f(x & ~m);
}

inline int pivotal_count(const Table& f, std::uint64_t x, int n) {
  int c = 0;
  for (int i = 1; i <= n; ++i) c += pivotal(f, x, i) ? 1 : 0;
  return c;
}

inline double influence(const Table& f, int n, int i, double p) {
  return expect([&](std::uint64_t x) { return pivotal(f, x, i) ? 1.0 : 0.0; }, n, p);
}

inline double mean(const Table& f, int n, double p) {
  return expect([&](std::uint64_t x) { return f(x) ? 1.0 : 0.0; }, n, p);
}

inline double total_influence(const Table& f, int n, double p) {
  double s = 0.0;
  for (int i = 1; i <= n; ++i) s += influence(f, n, i, p);
  return s;
}

// Definition-level monotonicity: f(x with bit i cleared) <= f(x with bit i set).
inline bool monotone(const Table& f, int n) {
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t m = std::uint64_t{1} << (i - 1);
      if (f(x & ~m) && !f(x | m)) return false;
    }
  }
  return true;
}

// C(n,k) p^k q^(n-k) by a running product in long double; fine for n <= 1000.
inline long double binom_pmf(int n, int k, long double p) {
  long double c = 1.0L;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c * std::pow(p, static_cast<long double>(k)) *
         std::pow(1.0L - p, static_cast<long double>(n - k));
}

// P(|K - np| >= u p q) by direct pmf summation.
inline double binomial_tail(int n, double p, double u) {
  const double gap = u * p * (1.0 - p);
  long double s = 0.0L;
  for (int k = 0; k <= n; ++k) {
    if (std::fabs(k - n * p) >= gap - 1e-12 * std::max(1.0, n * p)) s += binom_pmf(n, k, p);
  }
  return static_cast<double>(s);
}

// C(2m, m) / 2^(2m) as a running product of (m+j)/(4j) style factors.
inline double central_binomial_ratio(int m) {
  long double r = 1.0L;
  for (int j = 1; j <= m; ++j) r *= static_cast<long double>(m + j) / (4.0L * j);
  return static_cast<double>(r);
}

inline double rel_err(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace oracle

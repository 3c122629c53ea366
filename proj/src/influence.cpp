#include "pivotal/influence.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "pivotal/errors.hpp"

namespace pivotal {

namespace {

void check_coordinate(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("coordinate out of range");
}

template <class Fn>
void for_each_one(const BooleanFunction& f, Fn&& fn) {
  const auto words = f.words();
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::uint64_t b = words[j]; b != 0; b &= b - 1) {
      fn((j << 6) | static_cast<std::uint64_t>(std::countr_zero(b)));
    }
  }
}

}  // namespace

SecondOrderMatrix::SecondOrderMatrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("second-order matrix must be n x n");
  }
}

double SecondOrderMatrix::at(int i, int k) const {
  if (i < 1 || i > n_ || k < 1 || k > n_) throw std::out_of_range("coordinate out of range");
  if (i == k) throw std::out_of_range("second-order diagonal is undefined");
  return entries_[static_cast<std::size_t>((i - 1) * n_ + (k - 1))];
}

double SecondOrderMatrix::off_diagonal_square_sum() const {
  double s = 0.0;
  for (int i = 1; i <= n_; ++i) {
    for (int k = 1; k <= n_; ++k) {
      if (i != k) s += at(i, k) * at(i, k);
    }
  }
  return s;
}

double influence(const BooleanFunction& f, int i, Bias p) {
  check_coordinate(f, i);
  const auto w = weight_probabilities(f.arity(), p);
  const std::uint64_t m = bits::mask(i);
  double sum = 0.0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (f(x | m) != f(x & ~m)) sum += w[static_cast<std::size_t>(std::popcount(x))];
  }
  return sum;
}

InfluenceProfile total_influence(const BooleanFunction& f, Bias p) {
  InfluenceProfile prof;
  prof.p = p.p();
  prof.monotone_input = f.is_monotone();
  prof.per_coord.reserve(static_cast<std::size_t>(f.arity()));
  for (int i = 1; i <= f.arity(); ++i) {
    prof.per_coord.push_back(influence(f, i, p));
    prof.total += prof.per_coord.back();
  }
  return prof;
}

double expected_pivotal_size(const BooleanFunction& f, Bias p) {
  const auto w = weight_probabilities(f.arity(), p);
  double sum = 0.0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    sum += pivotal_count(f, x) * w[static_cast<std::size_t>(std::popcount(x))];
  }
  return sum;
}

ConditionalStats conditional_stats(const BooleanFunction& f, Bias p) {
  p.require_interior("conditional statistics");
  const int n = f.arity();
  const auto w = weight_probabilities(n, p);
  ConditionalStats st;
  st.p = p.p();
  st.cond_xi.assign(static_cast<std::size_t>(n), 0.0);
  st.cond_pivotal_coord.assign(static_cast<std::size_t>(n), 0.0);
  const double up = x_value(true, p);
  const double down = x_value(false, p);
  for_each_one(f, [&](std::uint64_t x) {
    const int k = std::popcount(x);
    const double P = w[static_cast<std::size_t>(k)];
    st.prob_one += P;
    st.cond_sn += s_n(k, n, p) * P;
    int pivots = 0;
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t m = bits::mask(i);
      st.cond_xi[static_cast<std::size_t>(i - 1)] += (bits::get(x, i) ? up : down) * P;
      if (f(x | m) != f(x & ~m)) {
        ++pivots;
        st.cond_pivotal_coord[static_cast<std::size_t>(i - 1)] += P;
      }
    }
    st.pivotal_times_f += pivots * P;
  });
  if (st.prob_one == 0.0) {
    throw UndefinedConditional("conditioning on {f=1}, which has probability 0");
  }
  st.cond_pivotal = st.pivotal_times_f / st.prob_one;
  st.cond_sn /= st.prob_one;
  for (auto& v : st.cond_xi) v /= st.prob_one;
  for (auto& v : st.cond_pivotal_coord) v /= st.prob_one;
  return st;
}

double correlation_xi(const BooleanFunction& f, int i, Bias p) {
  check_coordinate(f, i);
  const double up = x_value(true, p);
  const double down = x_value(false, p);
  const auto w = weight_probabilities(f.arity(), p);
  double sum = 0.0;
  for_each_one(f, [&](std::uint64_t x) {
    sum += (bits::get(x, i) ? up : down) * w[static_cast<std::size_t>(std::popcount(x))];
  });
  return sum;
}

double correlation_sn(const BooleanFunction& f, Bias p) {
  p.require_interior("S_n");
  const int n = f.arity();
  const auto w = weight_probabilities(n, p);
  double sum = 0.0;
  for_each_one(f, [&](std::uint64_t x) {
    const int k = std::popcount(x);
    sum += s_n(k, n, p) * w[static_cast<std::size_t>(k)];
  });
  return sum;
}

SecondOrderMatrix second_order(const BooleanFunction& f, Bias p) {
  const int n = f.arity();
  const double up = x_value(true, p);
  const double down = x_value(false, p);
  const auto w = weight_probabilities(n, p);
  std::vector<double> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  std::vector<double> xs(static_cast<std::size_t>(n));
  for_each_one(f, [&](std::uint64_t x) {
    const double P = w[static_cast<std::size_t>(std::popcount(x))];
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = ((x >> i) & 1U) ? up : down;
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        c[static_cast<std::size_t>(i * n + k)] +=
            xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(k)] * P;
      }
    }
  });
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i * n + i)] = std::nan("");
    for (int k = i + 1; k < n; ++k) {
      c[static_cast<std::size_t>(k * n + i)] = c[static_cast<std::size_t>(i * n + k)];
    }
  }
  return SecondOrderMatrix(n, std::move(c));
}

BooleanFunction pivotal_indicator(const BooleanFunction& f, int k) {
  check_coordinate(f, k);
  const std::uint64_t m = bits::mask(k);
  return BooleanFunction::tabulate(f.arity(),
                                   [&](std::uint64_t x) { return f(x | m) != f(x & ~m); });
}

}  // namespace pivotal

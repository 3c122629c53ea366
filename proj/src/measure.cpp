#include "pivotal/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pivotal {

Bias::Bias(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("bias p=" + std::to_string(p) + " is outside [0,1]");
  }
}

void Bias::require_interior(const char* what) const {
  if (!interior()) {
    throw std::domain_error(std::string(what) + " requires p in (0,1), got p=" +
                            std::to_string(p_));
  }
}

CubeFunction CubeFunction::of(const BooleanFunction& f) {
  return {f.arity(), [f](std::uint64_t x) { return f(x) ? 1.0 : 0.0; }};
}

CubeFunction CubeFunction::character(int n, int i, Bias p) {
  p.require_interior("X_i");
  if (i < 1 || i > n) throw std::out_of_range("character coordinate out of range");
  const double up = 1.0 / p.p();
  const double down = -1.0 / p.q();
  return {n, [=](std::uint64_t x) { return bits::get(x, i) ? up : down; }};
}

CubeFunction CubeFunction::sum_of_characters(int n, Bias p) {
  p.require_interior("S_n");
  return {n, [n, p](std::uint64_t x) { return s_n(std::popcount(x), n, p); }};
}

CubeFunction CubeFunction::operator*(const CubeFunction& other) const {
  if (n != other.n) throw std::invalid_argument("cube function arity mismatch");
  return {n, [a = at, b = other.at](std::uint64_t x) { return a(x) * b(x); }};
}

std::vector<double> weight_probabilities(int n, Bias p) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    w[static_cast<std::size_t>(k)] = std::pow(p.p(), k) * std::pow(p.q(), n - k);
  }
  return w;
}

double prob(std::uint64_t index, int n, Bias p) {
  const int k = std::popcount(index);
  return std::pow(p.p(), k) * std::pow(p.q(), n - k);
}

double prob(const Configuration& omega, Bias p) {
  const int k = omega.weight();
  return std::pow(p.p(), k) * std::pow(p.q(), omega.arity() - k);
}

double expectation(const CubeFunction& g, Bias p) {
  require_exact(g.n);
  const auto w = weight_probabilities(g.n, p);
  const std::uint64_t size = std::uint64_t{1} << g.n;
  double sum = 0.0;
  for (std::uint64_t x = 0; x < size; ++x) {
    sum += g.at(x) * w[static_cast<std::size_t>(std::popcount(x))];
  }
  return sum;
}

double expectation(const BooleanFunction& f, Bias p) {
  const auto w = weight_probabilities(f.arity(), p);
  double sum = 0.0;
  const auto words = f.words();
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::uint64_t b = words[j]; b != 0; b &= b - 1) {
      const std::uint64_t x = (j << 6) | static_cast<std::uint64_t>(std::countr_zero(b));
      sum += w[static_cast<std::size_t>(std::popcount(x))];
    }
  }
  return sum;
}

double x_value(bool bit, Bias p) {
  p.require_interior("X_i");
  return bit ? 1.0 / p.p() : -1.0 / p.q();
}

double x_value(const Configuration& omega, int i, Bias p) { return x_value(omega.get(i), p); }

double s_n(int weight, int n, Bias p) {
  p.require_interior("S_n");
  return (weight - n * p.p()) / (p.p() * p.q());
}

double s_n(const Configuration& omega, Bias p) { return s_n(omega.weight(), omega.arity(), p); }

double inner_product(const CubeFunction& g, const CubeFunction& h, Bias p) {
  return expectation(g * h, p);
}

MeanPolynomial::MeanPolynomial(const BooleanFunction& f)
    : n_(f.arity()), a_(f.weights().begin(), f.weights().end()) {}

MeanPolynomial::MeanPolynomial(int n, std::vector<std::uint64_t> coefficients)
    : n_(n), a_(std::move(coefficients)) {
  if (a_.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("weight enumerator must have n+1 entries");
  }
}

double MeanPolynomial::operator()(double p) const {
  const double q = 1.0 - p;
  double sum = 0.0;
  for (int k = 0; k <= n_; ++k) {
    const auto a = a_[static_cast<std::size_t>(k)];
    if (a != 0) sum += static_cast<double>(a) * std::pow(p, k) * std::pow(q, n_ - k);
  }
  return sum;
}

double MeanPolynomial::derivative(double p) const {
  const double q = 1.0 - p;
  double sum = 0.0;
  for (int k = 0; k <= n_; ++k) {
    const auto a = static_cast<double>(a_[static_cast<std::size_t>(k)]);
    if (a == 0.0) continue;
    // d/dp p^k q^(n-k) = k p^(k-1) q^(n-k) - (n-k) p^k q^(n-k-1)
    if (k > 0) sum += a * k * std::pow(p, k - 1) * std::pow(q, n_ - k);
    if (k < n_) sum -= a * (n_ - k) * std::pow(p, k) * std::pow(q, n_ - k - 1);
  }
  return sum;
}

MeanPolynomial mean_poly(const BooleanFunction& f) { return MeanPolynomial(f); }

double mean_derivative(const BooleanFunction& f, Bias p) {
  p.require_interior("dE/dp");
  return MeanPolynomial(f).derivative(p.p());
}

CheckList verify_trick_identity(const BooleanFunction& f, int i, Bias p) {
  const int n = f.arity();
  if (i < 1 || i > n) throw std::out_of_range("coordinate out of range");
  const auto w = weight_probabilities(n, p);
  double with_bit = 0.0, raised = 0.0, without_bit = 0.0, lowered = 0.0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const double P = w[static_cast<std::size_t>(std::popcount(x))];
    const bool bit = bits::get(x, i);
    if (f(x)) (bit ? with_bit : without_bit) += P;
    if (f(bits::set_coordinate(x, i, true))) raised += P;
    if (f(bits::set_coordinate(x, i, false))) lowered += P;
  }
  CheckList out = equality_check("trick.upper", p.p(), with_bit, p.p() * raised, kCheckRelTol);
  auto lower = equality_check("trick.lower", p.p(), without_bit, p.q() * lowered, kCheckRelTol);
  out.insert(out.end(), lower.begin(), lower.end());
  if (n == 1 && p.interior()) {
    const double jump = (f(1) ? 1.0 : 0.0) - (f(0) ? 1.0 : 0.0);
    const double corr = (f(1) ? p.p() * x_value(true, p) : 0.0) +
                        (f(0) ? p.q() * x_value(false, p) : 0.0);
    auto one_dim = equality_check("trick.one_dimensional", p.p(), jump, corr, kCheckRelTol);
    out.insert(out.end(), one_dim.begin(), one_dim.end());
  }
  return out;
}

}  // namespace pivotal

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pivotal/boolean_function.hpp"
#include "pivotal/check_result.hpp"
#include "pivotal/configuration.hpp"

namespace pivotal {

/// Coin parameter p of the product measure P_p on {0,1}^n.
class Bias {
 public:
  /// Accepts p in [0,1]; throws std::domain_error otherwise.
  explicit Bias(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }
  bool interior() const noexcept { return p_ > 0.0 && p_ < 1.0; }

  /// Throws std::domain_error at p ∈ {0,1}; `what` names the quantity that
  /// divides by p or 1-p.
  void require_interior(const char* what) const;

 private:
  double p_;
};

/// A real-valued function on {0,1}^n given by a pure procedure on indices.
struct CubeFunction {
  int n = 0;
  std::function<double(std::uint64_t)> at;

  static CubeFunction of(const BooleanFunction& f);
  static CubeFunction character(int n, int i, Bias p);  // X_i
  static CubeFunction sum_of_characters(int n, Bias p);  // S_n
  CubeFunction operator*(const CubeFunction& other) const;
};

/// P(ω) = p^K (1-p)^(n-K), K = |ω|.
double prob(const Configuration& omega, Bias p);
double prob(std::uint64_t index, int n, Bias p);

/// probs[k] = p^k (1-p)^(n-k); pow(0,0) = 1 keeps the endpoints exact.
std::vector<double> weight_probabilities(int n, Bias p);

/// Σ_ω g(ω) P(ω) over all 2^n configurations (n <= kExactCap).
double expectation(const CubeFunction& g, Bias p);
double expectation(const BooleanFunction& f, Bias p);

/// X_i(ω) = ω(i)/p - (1-ω(i))/(1-p).
double x_value(const Configuration& omega, int i, Bias p);
double x_value(bool bit, Bias p);

/// S_n(ω) = Σ_i X_i(ω) = (K - np) / (p(1-p)).
double s_n(const Configuration& omega, Bias p);
double s_n(int weight, int n, Bias p);

/// <g, h> = Σ_ω g(ω) h(ω) P(ω).
double inner_product(const CubeFunction& g, const CubeFunction& h, Bias p);

/// E_p(f) = Σ_k a_k p^k (1-p)^(n-k) as a polynomial in p, from the weight
/// enumerator of f.
class MeanPolynomial {
 public:
  explicit MeanPolynomial(const BooleanFunction& f);
  MeanPolynomial(int n, std::vector<std::uint64_t> coefficients);

  double operator()(double p) const;
  /// d/dp of the polynomial, differentiated term by term.
  double derivative(double p) const;

  int arity() const noexcept { return n_; }
  std::span<const std::uint64_t> coefficients() const noexcept { return a_; }

 private:
  int n_;
  std::vector<std::uint64_t> a_;
};

MeanPolynomial mean_poly(const BooleanFunction& f);

/// d/dp E_p(f); requires p ∈ (0,1).
double mean_derivative(const BooleanFunction& f, Bias p);

/// Checks, each as a pair of one-sided results within 1e-12·scale:
///   Σ f(ω) ω(i) P(ω)     = p Σ f(ω^i) P(ω)
///   Σ f(ω)(1-ω(i)) P(ω)  = (1-p) Σ f(ω_i) P(ω)
/// and, when n == 1, f(1) - f(0) = E(f X_1).
CheckList verify_trick_identity(const BooleanFunction& f, int i, Bias p);

}  // namespace pivotal

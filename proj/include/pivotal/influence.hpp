#pragma once

#include <vector>

#include "pivotal/boolean_function.hpp"
#include "pivotal/measure.hpp"

namespace pivotal {

struct InfluenceProfile {
  double p = 0.0;
  std::vector<double> per_coord;  // Inf_1 .. Inf_n
  double total = 0.0;             // Σ Inf_i = E|P(f)|
  bool monotone_input = false;
};

/// Conditional quantities given {f = 1}.
struct ConditionalStats {
  double p = 0.0;
  double prob_one = 0.0;           // P(f=1)
  double cond_pivotal = 0.0;       // E(|P(f)| | f=1)
  double cond_sn = 0.0;            // E(S_n | f=1)
  std::vector<double> cond_xi;     // E(X_i f | f=1)
  std::vector<double> cond_pivotal_coord;  // P(i ∈ P(f) | f=1)
  double pivotal_times_f = 0.0;    // E(|P(f)| f)
};

/// Off-diagonal matrix c[i][k] = E(X_i X_k f), i != k (1-based accessors).
class SecondOrderMatrix {
 public:
  SecondOrderMatrix(int n, std::vector<double> entries);

  int arity() const noexcept { return n_; }
  /// Throws std::out_of_range on i == k or out-of-range coordinates.
  double at(int i, int k) const;
  /// Σ_{i != k} c[i][k]^2.
  double off_diagonal_square_sum() const;

 private:
  int n_;
  std::vector<double> entries_;  // row-major n*n, diagonal unused
};

/// P(i ∈ P(f)) = Σ_ω |δ_i f(ω)| P(ω); valid for every f and p ∈ [0,1].
double influence(const BooleanFunction& f, int i, Bias p);

InfluenceProfile total_influence(const BooleanFunction& f, Bias p);

/// E(|P(f)|) computed directly as Σ_ω |P(f,ω)| P(ω).
double expected_pivotal_size(const BooleanFunction& f, Bias p);

/// Requires p ∈ (0,1); throws UndefinedConditional when P(f=1) == 0.
ConditionalStats conditional_stats(const BooleanFunction& f, Bias p);

/// Signed correlation E(X_i f); equals the influence only for monotone f.
double correlation_xi(const BooleanFunction& f, int i, Bias p);

/// E(S_n f).
double correlation_sn(const BooleanFunction& f, Bias p);

SecondOrderMatrix second_order(const BooleanFunction& f, Bias p);

/// g_k(ω) = 1 iff k ∈ P(f, ω). g_k does not depend on ω(k).
BooleanFunction pivotal_indicator(const BooleanFunction& f, int k);

}  // namespace pivotal

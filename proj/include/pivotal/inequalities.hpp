#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pivotal/boolean_function.hpp"
#include "pivotal/check_result.hpp"
#include "pivotal/measure.hpp"

namespace pivotal {

/// Every check returns a CheckList whose first entry is the main verdict;
/// further entries are the derived chain checks (Cauchy-Schwarz steps,
/// one-sided halves of an identity).

/// E|P(f)| <= sqrt(n E(f) / (p(1-p))), monotone f.
CheckList check_theorem1(const BooleanFunction& f, Bias p);

/// Σ Inf_i^2 <= E(f)/(p(1-p)), plus the chain E|P(f)| <= sqrt(n Σ Inf_i^2)
/// and sqrt(n Σ Inf_i^2) <= sqrt(n E(f)/(p(1-p))). Monotone f.
CheckList check_bessel(const BooleanFunction& f, Bias p);

/// dE/dp = E|P(f)| within 1e-9·max(1, E|P(f)|), as two one-sided checks.
CheckList check_margulis_russo(const BooleanFunction& f, Bias p);

enum class HoeffdingVariant { Stated, Proved };

/// Stated: 2 exp(-2 p^2 (1-p)^2 u^2 / n). Proved: 2 exp(-p^2 (1-p)^2 u^2 / (2n)).
double hoeffding_bound(long n, double p, double u, HoeffdingVariant variant);

struct TailPoint {
  long n = 0;
  double p = 0.0;
  double u = 0.0;
  double exact = 0.0;  // P(|S_n| >= u)
  double bound = 0.0;  // stated Hoeffding bound (raw, may exceed 1)
};

/// Exact P(|S_n| >= u) by log-domain binomial summation; n <= 10^6.
TailPoint exact_tail(long n, double p, double u);

/// P(f=1) <= 2 exp(-(1/(2n)) (p(1-p) E(S_n | f=1))^2), any f.
CheckList check_bth(const BooleanFunction& f, Bias p);

/// P(f=1) <= 2 exp(-(1/(2n)) ((1-p) E(|P(f)| | f=1))^2), monotone f.
CheckList check_imme(const BooleanFunction& f, Bias p);

/// P(f=1) <= 2 exp(-(1/2) Σ_i (p(1-p) E(X_i f | f=1))^2), any f; the second
/// entry checks that this bound is at most the check_bth bound.
CheckList check_rth(const BooleanFunction& f, Bias p);

/// P(f=1) <= 2 exp(-(1/2) Σ_i ((1-p) P(i ∈ P(f) | f=1))^2), monotone f.
CheckList check_crth(const BooleanFunction& f, Bias p);

/// Σ_i E(X_i f)^2 <= 2 P(f=1)^2 / (p^2 (1-p)^2) · ln(2 / P(f=1)).
CheckList check_talag_explicit(const BooleanFunction& f, Bias p);

/// Σ_{i != k} E(X_i X_k f)^2 <= c(p) Σ_k Inf_k^2 ln(2 / Inf_k),
/// c(p) = 2 / (p^2 (1-p)^2); Inf_k = 0 terms contribute 0. Monotone f.
CheckList check_stagi(const BooleanFunction& f, Bias p);

/// Report-only scan at p = 1/2 of Σ_{i != k} E(f X_i X_k)^2 <= K W ln(K/W),
/// W = Σ_k Inf_k^2.
struct EtalagScan {
  bool skipped = false;
  std::string notes;
  double lhs = 0.0;
  double w = 0.0;
  std::vector<double> k_grid;
  std::vector<double> rhs;
  std::vector<bool> passes;
  std::optional<double> minimal_k;
};

EtalagScan etalag_scan(const BooleanFunction& f, std::span<const double> k_grid);

/// Default K grid used by the CLI report: 0.5, 1, 1.5, ..., 64.
std::vector<double> default_k_grid();

/// Influence of coordinate 1 for majority(n) at p = 1/2: C(n-1, (n-1)/2) / 2^(n-1).
double majority_influence(long n_odd);

/// Checks the bound Inf <= 1/sqrt(n p (1-p)) and, for n >= 101, the 2% band
/// around sqrt(2/(pi n)). 3 <= n <= 10^5, n odd.
CheckList check_majority_asymptotic(long n_odd);

/// Default grid 0.1, 0.2, ..., 0.9.
std::vector<double> default_p_grid();

/// All applicable checks at each p; inapplicable ones are marked, never thrown.
CheckList run_suite(const BooleanFunction& f, std::span<const double> p_grid);

}  // namespace pivotal

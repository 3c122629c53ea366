#include "pivotal/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pivotal/errors.hpp"
#include "pivotal/influence.hpp"

namespace pivotal {

namespace {

constexpr double kMargulisRussoTol = 1e-9;

std::string capped_note(double bound) {
  std::ostringstream os;
  os.precision(17);
  os << "min(1,rhs)=" << std::min(1.0, bound);
  return os.str();
}

CheckResult probability_bound(std::string name, double p, double lhs, double rhs) {
  CheckResult r = make_check(std::move(name), p, lhs, rhs);
  r.notes = capped_note(rhs);
  return r;
}

double square(double x) { return x * x; }

}  // namespace

CheckList check_theorem1(const BooleanFunction& f, Bias p) {
  p.require_interior("theorem1");
  if (!f.is_monotone()) return {inapplicable("theorem1", p.p(), "requires monotone f")};
  const double lhs = total_influence(f, p).total;
  const double rhs = std::sqrt(f.arity() * expectation(f, p) / (p.p() * p.q()));
  return {make_check("theorem1", p.p(), lhs, rhs)};
}

CheckList check_bessel(const BooleanFunction& f, Bias p) {
  p.require_interior("bessel");
  if (!f.is_monotone()) return {inapplicable("bessel", p.p(), "requires monotone f")};
  const auto prof = total_influence(f, p);
  double squares = 0.0;
  for (double v : prof.per_coord) squares += v * v;
  const double mean = expectation(f, p);
  const double rhs = mean / (p.p() * p.q());
  const double n = f.arity();
  return {
      make_check("bessel", p.p(), squares, rhs),
      make_check("bessel.cauchy_schwarz", p.p(), prof.total, std::sqrt(n * squares)),
      make_check("bessel.recovers_theorem1", p.p(), std::sqrt(n * squares), std::sqrt(n * rhs)),
  };
}

CheckList check_margulis_russo(const BooleanFunction& f, Bias p) {
  p.require_interior("margulis_russo");
  if (!f.is_monotone()) return {inapplicable("margulis_russo", p.p(), "requires monotone f")};
  const double derivative = mean_derivative(f, p);
  const double total = total_influence(f, p).total;
  return equality_check("margulis_russo", p.p(), derivative, total, kMargulisRussoTol);
}

double hoeffding_bound(long n, double p, double u, HoeffdingVariant variant) {
  if (n < 1) throw std::invalid_argument("hoeffding_bound: n must be positive");
  if (!(u > 0.0)) throw std::invalid_argument("hoeffding_bound: u must be positive");
  Bias(p).require_interior("hoeffding_bound");
  const double pq2 = square(p * (1.0 - p));
  const double exponent = variant == HoeffdingVariant::Stated
                              ? -2.0 * pq2 * u * u / static_cast<double>(n)
                              : -pq2 * u * u / (2.0 * static_cast<double>(n));
  return 2.0 * std::exp(exponent);
}

TailPoint exact_tail(long n, double p, double u) {
  if (n < 1 || n > 1'000'000) throw std::invalid_argument("exact_tail: n must be in [1, 1e6]");
  TailPoint t{n, p, u, 0.0, hoeffding_bound(n, p, u, HoeffdingVariant::Stated)};
  const double q = 1.0 - p;
  const double center = static_cast<double>(n) * p;
  const double gap = u * p * q;
  // Ties |k - np| == u p q count as inside the tail event.
  const double slop = 1e-12 * std::max(1.0, center);
  const double log_n_fact = std::lgamma(static_cast<double>(n) + 1.0);
  const double lp = std::log(p);
  const double lq = std::log(q);
  double sum = 0.0;
  for (long k = 0; k <= n; ++k) {
    if (std::fabs(static_cast<double>(k) - center) < gap - slop) continue;
    const double kd = static_cast<double>(k);
    const double log_term = log_n_fact - std::lgamma(kd + 1.0) -
                            std::lgamma(static_cast<double>(n - k) + 1.0) + kd * lp +
                            static_cast<double>(n - k) * lq;
    sum += std::exp(log_term);
  }
  t.exact = std::clamp(sum, 0.0, 1.0);
  return t;
}

CheckList check_bth(const BooleanFunction& f, Bias p) {
  const auto st = conditional_stats(f, p);
  const double n = f.arity();
  const double rhs = 2.0 * std::exp(-square(p.p() * p.q() * st.cond_sn) / (2.0 * n));
  return {probability_bound("bth", p.p(), st.prob_one, rhs)};
}

CheckList check_imme(const BooleanFunction& f, Bias p) {
  p.require_interior("imme");
  if (!f.is_monotone()) return {inapplicable("imme", p.p(), "requires monotone f")};
  const auto st = conditional_stats(f, p);
  const double n = f.arity();
  const double rhs = 2.0 * std::exp(-square(p.q() * st.cond_pivotal) / (2.0 * n));
  return {probability_bound("imme", p.p(), st.prob_one, rhs)};
}

CheckList check_rth(const BooleanFunction& f, Bias p) {
  const auto st = conditional_stats(f, p);
  const double n = f.arity();
  double exponent = 0.0;
  for (double c : st.cond_xi) exponent += square(p.p() * p.q() * c);
  const double rhs = 2.0 * std::exp(-0.5 * exponent);
  const double bth_rhs = 2.0 * std::exp(-square(p.p() * p.q() * st.cond_sn) / (2.0 * n));
  return {probability_bound("rth", p.p(), st.prob_one, rhs),
          make_check("rth.below_bth", p.p(), rhs, bth_rhs)};
}

CheckList check_crth(const BooleanFunction& f, Bias p) {
  p.require_interior("crth");
  if (!f.is_monotone()) return {inapplicable("crth", p.p(), "requires monotone f")};
  const auto st = conditional_stats(f, p);
  double exponent = 0.0;
  for (double c : st.cond_pivotal_coord) exponent += square(p.q() * c);
  const double rhs = 2.0 * std::exp(-0.5 * exponent);
  return {probability_bound("crth", p.p(), st.prob_one, rhs)};
}

CheckList check_talag_explicit(const BooleanFunction& f, Bias p) {
  p.require_interior("talag_explicit");
  const double mass = expectation(f, p);
  if (mass == 0.0 || mass == 1.0) {
    return {inapplicable("talag_explicit", p.p(), "P(f=1) is 0 or 1; bound is trivial")};
  }
  double lhs = 0.0;
  for (int i = 1; i <= f.arity(); ++i) lhs += square(correlation_xi(f, i, p));
  const double rhs = 2.0 * square(mass) / square(p.p() * p.q()) * std::log(2.0 / mass);
  CheckResult r = make_check("talag_explicit", p.p(), lhs, rhs);
  std::ostringstream os;
  os.precision(17);
  os << "explicit K=" << 2.0 / square(p.p() * p.q()) << " with ln(2/P)";
  if (p.p() == 0.5) {
    os << "; implied K=" << lhs / (square(mass) * std::log(std::numbers::e / mass))
       << " with ln(e/P), " << lhs / (square(mass) * std::log(2.0 / mass)) << " with ln(2/P)";
  }
  r.notes = os.str();
  return {r};
}

CheckList check_stagi(const BooleanFunction& f, Bias p) {
  p.require_interior("stagi");
  if (!f.is_monotone()) return {inapplicable("stagi", p.p(), "requires monotone f")};
  const double lhs = second_order(f, p).off_diagonal_square_sum();
  double sum = 0.0;
  for (int k = 1; k <= f.arity(); ++k) {
    const double inf = influence(f, k, p);
    if (inf > 0.0) sum += inf * inf * std::log(2.0 / inf);
  }
  const double c = 2.0 / square(p.p() * p.q());
  return {make_check("stagi", p.p(), lhs, c * sum)};
}

std::vector<double> default_k_grid() {
  std::vector<double> g;
  for (int j = 1; j <= 128; ++j) g.push_back(0.5 * j);
  return g;
}

EtalagScan etalag_scan(const BooleanFunction& f, std::span<const double> k_grid) {
  EtalagScan scan;
  scan.k_grid.assign(k_grid.begin(), k_grid.end());
  if (!f.is_monotone()) {
    scan.skipped = true;
    scan.notes = "scan restricted to monotone f";
    return scan;
  }
  const Bias half(0.5);
  for (int k = 1; k <= f.arity(); ++k) scan.w += square(influence(f, k, half));
  if (scan.w == 0.0) {
    scan.skipped = true;
    scan.notes = "W = sum of squared influences is 0";
    return scan;
  }
  scan.lhs = second_order(f, half).off_diagonal_square_sum();
  for (double K : scan.k_grid) {
    const double rhs = K * scan.w * std::log(K / scan.w);
    scan.rhs.push_back(rhs);
    const bool pass = scan.lhs <= rhs;
    scan.passes.push_back(pass);
    if (pass && !scan.minimal_k) scan.minimal_k = K;
  }
  scan.notes = "report only; K is not explicit";
  return scan;
}

double majority_influence(long n_odd) {
  if (n_odd < 1 || n_odd % 2 == 0) throw std::invalid_argument("majority needs odd n");
  const double m = static_cast<double>(n_odd - 1) / 2.0;
  return std::exp(std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0) -
                  2.0 * m * std::numbers::ln2);
}

CheckList check_majority_asymptotic(long n_odd) {
  if (n_odd % 2 == 0) throw std::invalid_argument("majority needs odd n");
  if (n_odd < 3 || n_odd > 100'000) throw std::invalid_argument("n must be in [3, 1e5]");
  const double n = static_cast<double>(n_odd);
  const double inf = majority_influence(n_odd);
  CheckList out{make_check("majority.upbo", 0.5, inf, 1.0 / std::sqrt(n * 0.25))};
  const double asymptotic = std::sqrt(2.0 / (std::numbers::pi * n));
  if (n_odd >= 101) {
    auto r = make_check("majority.asymptotic", 0.5, std::fabs(inf / asymptotic - 1.0), 0.02, 0.0);
    std::ostringstream os;
    os.precision(17);
    os << "exact=" << inf << " sqrt(2/(pi n))=" << asymptotic;
    r.notes = os.str();
    out.push_back(r);
  } else {
    out.push_back(inapplicable("majority.asymptotic", 0.5, "2% band asserted for n >= 101"));
  }
  return out;
}

std::vector<double> default_p_grid() {
  std::vector<double> g;
  for (int j = 1; j <= 9; ++j) g.push_back(j / 10.0);
  return g;
}

CheckList run_suite(const BooleanFunction& f, std::span<const double> p_grid) {
  using Check = CheckList (*)(const BooleanFunction&, Bias);
  struct Entry {
    const char* name;
    Check fn;
  };
  static constexpr Entry kChecks[] = {
      {"theorem1", check_theorem1},   {"bessel", check_bessel},
      {"margulis_russo", check_margulis_russo}, {"bth", check_bth},
      {"imme", check_imme},           {"rth", check_rth},
      {"crth", check_crth},           {"talag_explicit", check_talag_explicit},
      {"stagi", check_stagi},
  };
  CheckList out;
  for (double pv : p_grid) {
    for (const auto& entry : kChecks) {
      try {
        auto part = entry.fn(f, Bias(pv));
        out.insert(out.end(), part.begin(), part.end());
      } catch (const std::domain_error& e) {
        out.push_back(inapplicable(entry.name, pv, e.what()));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
    return a.name != b.name ? a.name < b.name : a.p < b.p;
  });
  return out;
}

}  // namespace pivotal

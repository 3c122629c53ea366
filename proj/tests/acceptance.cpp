// One PASS/FAIL line per acceptance criterion. Tolerances are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pivotal/cli.hpp"
#include "pivotal/errors.hpp"
#include "pivotal/expr.hpp"
#include "pivotal/families.hpp"
#include "pivotal/generators.hpp"
#include "pivotal/inequalities.hpp"
#include "pivotal/influence.hpp"
#include "pivotal/measure.hpp"
#include "pivotal/montecarlo.hpp"
#include "support/oracles.hpp"
#include "support/random_expr.hpp"

using namespace pivotal;

namespace {

constexpr double kIdentityRelTol = 1e-10;     // criterion 2
constexpr double kMargulisRussoRelTol = 1e-9;  // criterion 3
constexpr double kFiniteDiffStep = 1e-5;       // criterion 3
constexpr double kFiniteDiffAbsTol = 1e-5;     // criterion 3
constexpr double kSpotAbsTol = 1e-4;           // criterion 4
constexpr double kMajorityRelTol = 1e-12;      // criterion 5
constexpr double kConditionalAbsTol = 1e-12;   // criterion 6
constexpr double kMinCoverage = 0.92;          // criterion 8

const std::vector<double> kGrid = default_p_grid();

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 5) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool rel_close(double a, double b, double tol) { return oracle::rel_err(a, b) <= tol; }

void require_checks(Outcome& o, const CheckList& list, const std::string& tag) {
  for (const auto& c : list) {
    if (!c.applicable) continue;
    // holds <=> slack >= -tol with tol = 1e-12 * max(1, |lhs|, |rhs|)
    o.require(c.holds, tag + " " + c.name + fmt(" p=%.2f", c.p) + fmt(" slack=%.3g", c.slack));
  }
}

CheckList guarded(const std::function<CheckList()>& fn) {
  try {
    return fn();
  } catch (const UndefinedConditional&) {
    return {};
  }
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t dedekind[] = {3, 6, 20, 168};
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto fs = all_monotone(n);
    o.require(fs.size() == dedekind[n - 1],
              "n=" + std::to_string(n) + " count " + std::to_string(fs.size()));
    for (const auto& f : fs) {
      for (double pv : kGrid) {
        const Bias p(pv);
        for (const auto& part :
             {check_theorem1(f, p), check_bessel(f, p), guarded([&] { return check_imme(f, p); }),
              guarded([&] { return check_crth(f, p); }), check_stagi(f, p)}) {
          require_checks(o, part, "n=" + std::to_string(n));
          checked += part.size();
        }
      }
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 30.0, fmt("runtime %.2fs", t));
  o.detail = std::to_string(checked) + " checks over 197 functions x 9 p, " + fmt("%.2fs", t) +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2002);
  int monotone_count = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 10;
    const bool mono = trial % 2 == 0;
    const auto f = mono ? random_monotone(n, rng, 0.1) : random_function(n, rng);
    monotone_count += mono ? 1 : 0;
    const auto view = [&f](std::uint64_t x) { return f(x); };
    for (double pv : kGrid) {
      const Bias p(pv);
      const std::string tag = "trial " + std::to_string(trial) + fmt(" p=%.1f", pv);
      for (int i = 1; i <= n; ++i) {
        for (const auto& c : verify_trick_identity(f, i, p)) {
          o.require(rel_close(c.lhs, c.rhs, kIdentityRelTol), tag + " " + c.name);
        }
      }
      if (!mono) continue;
      const double total = total_influence(f, p).total;
      const double fsn = oracle::expect(
          [&](std::uint64_t x) { return view(x) ? oracle::sn(x, n, pv) : 0.0; }, n, pv);
      o.require(rel_close(total, fsn, kIdentityRelTol), tag + " E|P| vs E(S_n f)");
      o.require(rel_close(total, correlation_sn(f, p), kIdentityRelTol), tag + " correlation_sn");
      if (f.count_ones() == 0) continue;
      const auto st = conditional_stats(f, p);
      o.require(rel_close(total, st.pivotal_times_f / pv, kIdentityRelTol), tag + " mr7");
      o.require(rel_close(pv * st.cond_sn, st.cond_pivotal, kIdentityRelTol), tag + " ral");
    }
  }
  for (int n = 1; n <= 10; ++n) {
    for (double pv : kGrid) {
      const Bias p(pv);
      const double norm = 1.0 / (pv * (1.0 - pv));
      for (int i = 1; i <= n; ++i) {
        const auto xi = CubeFunction::character(n, i, p);
        o.require(rel_close(inner_product(xi, xi, p), norm, kIdentityRelTol),
                  "norm n=" + std::to_string(n));
        const int k = i % n + 1;
        if (k != i) {
          const double cross = inner_product(xi, CubeFunction::character(n, k, p), p);
          o.require(std::fabs(cross) <= kIdentityRelTol * norm, "orthogonality");
        }
      }
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, fmt("runtime %.2fs", t));
  o.detail = "500 functions (" + std::to_string(monotone_count) + " monotone), n<=10, " +
             fmt("%.2fs", t) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<BooleanFunction> fs;
  for (int n = 1; n <= 4; ++n) {
    for (auto& f : all_monotone(n)) fs.push_back(std::move(f));
  }
  std::mt19937_64 rng(3003);
  for (int j = 0; j < 200; ++j) fs.push_back(random_monotone(1 + j % 10, rng, 0.05 + 0.01 * (j % 10)));
  double worst_fd = 0.0;
  for (const auto& f : fs) {
    for (double pv : kGrid) {
      const Bias p(pv);
      const double d = mean_derivative(f, p);
      const double total = total_influence(f, p).total;
      o.require(std::fabs(d - total) <= kMargulisRussoRelTol * std::max(1.0, total),
                fmt("dE/dp vs E|P| at p=%.1f", pv));
      const double h = kFiniteDiffStep;
      const double fd = (expectation(f, Bias(pv + h)) - expectation(f, Bias(pv - h))) / (2 * h);
      worst_fd = std::max(worst_fd, std::fabs(fd - d));
      o.require(std::fabs(fd - d) <= kFiniteDiffAbsTol, fmt("finite difference at p=%.1f", pv));
    }
  }
  o.detail = std::to_string(fs.size()) + " monotone functions x 9 p, worst |fd - dE/dp| = " +
             fmt("%.2e", worst_fd) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int points = 0;
  for (long n : {10L, 100L, 1000L}) {
    for (double pv : kGrid) {
      const double sigma = std::sqrt(n / (pv * (1.0 - pv)));
      for (int j = 1; j <= 20; ++j) {
        const double u = 0.3 * j * sigma;  // 0.3 to 6 standard deviations of S_n
        const auto t = exact_tail(n, pv, u);
        ++points;
        const std::string tag = "n=" + std::to_string(n) + fmt(" p=%.1f", pv) + fmt(" u=%.3g", u);
        o.require(t.exact <= t.bound, tag + " exact > bound");
        o.require(std::min(1.0, t.bound) >= t.exact, tag + " exact > min(1,bound)");
        if (n <= 100) {
          o.require(std::fabs(t.exact - oracle::binomial_tail(static_cast<int>(n), pv, u)) < 1e-12,
                    tag + " exact vs pmf sum");
        }
      }
    }
  }
  const auto spot = exact_tail(100, 0.5, 40);
  o.require(std::fabs(spot.exact - 0.0569) <= kSpotAbsTol, fmt("spot exact %.6f", spot.exact));
  o.require(std::fabs(spot.bound - 0.27067) <= kSpotAbsTol, fmt("spot bound %.6f", spot.bound));
  o.detail = std::to_string(points) + " (n,p,u) points; spot exact=" + fmt("%.5f", spot.exact) +
             " bound=" + fmt("%.5f", spot.bound) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// C(100,50)/2^100 by repeated averaging of Pascal rows.
double pascal_central(int n) {
  std::vector<double> row{1.0};
  for (int k = 1; k <= n; ++k) {
    std::vector<double> next(row.size() + 1, 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j] / 2;
      next[j + 1] += row[j] / 2;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n / 2)];
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double exact = majority_influence(101);
  const double direct = pascal_central(100);
  o.require(rel_close(exact, direct, kMajorityRelTol), fmt("lgamma vs Pascal %.3e", oracle::rel_err(exact, direct)));
  o.require(rel_close(exact, oracle::central_binomial_ratio(50), kMajorityRelTol), "lgamma vs product");
  const auto checks = check_majority_asymptotic(101);
  o.require(checks.size() == 2 && checks[0].holds && checks[1].applicable && checks[1].holds,
            "upbo / 2% band");
  o.require(exact <= 1.0 / std::sqrt(101 / 4.0), "upbo");
  const double asym = std::sqrt(2.0 / (101 * std::numbers::pi));
  o.require(std::fabs(exact / asym - 1.0) <= 0.02, "2% band");
  const double t = seconds_since(t0);
  o.require(t < 1.0, fmt("runtime %.3fs", t));
  o.detail = fmt("Inf=%.6f", exact) + fmt(" sqrt(2/(pi n))=%.6f", asym) +
             fmt(" ratio-1=%.4f", exact / asym - 1.0) + fmt(" %.3fs", t) +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto st = conditional_stats(family::majority(3), Bias(0.5));
  o.require(std::fabs(st.prob_one - 0.5) <= kConditionalAbsTol, "prob_one");
  o.require(std::fabs(st.cond_pivotal - 1.5) <= kConditionalAbsTol, "cond_pivotal");
  o.require(std::fabs(st.cond_sn - 3.0) <= kConditionalAbsTol, "cond_sn");
  o.require(std::fabs(0.5 * st.cond_sn - st.cond_pivotal) <= kConditionalAbsTol, "p*cond_sn");
  o.detail = fmt("prob_one=%.17g", st.prob_one) + fmt(" cond_pivotal=%.17g", st.cond_pivotal) +
             fmt(" cond_sn=%.17g", st.cond_sn) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion7() {
  Outcome o;
  int functions = 0, evaluated = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t tables = std::uint64_t{1} << (1U << n);
    for (std::uint64_t t = 0; t < tables; ++t) {
      const BooleanFunction f(n, {t});
      ++functions;
      if (f.count_ones() == 0) continue;  // conditioning on a null event
      for (double pv : kGrid) {
        const Bias p(pv);
        const auto bth = check_bth(f, p);
        const auto rth = check_rth(f, p);
        const std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
        require_checks(o, bth, tag);
        require_checks(o, rth, tag);
        o.require(rth[0].rhs <= bth[0].rhs * (1 + 1e-12), tag + " rhs(rth) > rhs(bth)");
        ++evaluated;
      }
    }
  }
  o.detail = std::to_string(functions) + " functions, " + std::to_string(evaluated) +
             " (f,p) pairs with P(f=1)>0" + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const int seeds = 200;
  SamplingOptions opts;
  opts.samples = 20000;
  opts.delta = 0.05;
  opts.workers = std::max(1U, std::thread::hardware_concurrency());

  const auto dict = family_oracle(FamilySpec::parse("dictator:101,1"));
  const auto maj = family_oracle(FamilySpec::parse("majority:101"));
  const double maj_inf = majority_influence(101);
  int cover_dict = 0, cover_maj = 0;
  for (int s = 0; s < seeds; ++s) {
    opts.seed = static_cast<std::uint64_t>(s);
    cover_dict += estimate_mean(dict, 0.3, opts).covers(0.3) ? 1 : 0;
    cover_maj += estimate_influence(maj, 1, 0.5, opts).covers(maj_inf) ? 1 : 0;
  }
  const double rd = static_cast<double>(cover_dict) / seeds;
  const double rm = static_cast<double>(cover_maj) / seeds;
  o.require(rd >= kMinCoverage, fmt("dictator coverage %.3f", rd));
  o.require(rm >= kMinCoverage, fmt("majority coverage %.3f", rm));

  auto cli = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    pivotal::cli::run(args, out, err);
    return out.str();
  };
  const std::vector<std::string> args{"estimate", "--family", "majority:101", "--p", "0.5",
                                      "--m", "50000", "--coord", "1", "--seed", "7"};
  auto threaded = args;
  threaded.insert(threaded.end(), {"--workers", "4"});
  const auto first = cli(args);
  o.require(!first.empty() && first == cli(args), "rerun differs");
  o.require(first == cli(threaded), "worker count changes output");
  o.detail = fmt("coverage dictator=%.3f", rd) + fmt(" majority(101)=%.3f", rm) +
             " over 200 seeds, m=20000; reruns byte-identical" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9009);
  std::size_t configs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Expr e = testgen::random_expr(rng, 6, 12);
    const std::string text = print_expr(e);
    o.require(parse_expr(text) == e, "round trip: " + text.substr(0, 60));
    const int n = std::max(1, e.arity());
    const auto table = compile(e, n);
    const auto fn = expr_oracle(e, n);
    Configuration w(n);
    for (std::uint64_t x = 0; x < table.size(); ++x) {
      w.mutable_words()[0] = x;
      ++configs;
      if (table(x) != fn(w)) {
        o.require(false, "compile/oracle mismatch: " + text.substr(0, 60));
        break;
      }
    }
  }
  o.detail = "1000 ASTs, " + std::to_string(configs) + " configurations compared" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"exhaustive monotone suite n<=4", criterion1},
      {"identity suite", criterion2},
      {"Margulis-Russo", criterion3},
      {"Hoeffding dominance", criterion4},
      {"majority asymptotic", criterion5},
      {"majority(3) conditional example", criterion6},
      {"deviation bounds for all f, n<=3", criterion7},
      {"Monte Carlo coverage and reproducibility", criterion8},
      {"parser round trip and compile agreement", criterion9},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s\n", out.pass ? "PASS" : "FAIL", index, name, out.detail.c_str());
    std::fflush(stdout);
    failed += out.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

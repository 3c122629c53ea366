#include "pivotal/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pivotal/errors.hpp"
#include "pivotal/expr.hpp"
#include "pivotal/families.hpp"
#include "pivotal/influence.hpp"
#include "pivotal/measure.hpp"
#include "pivotal/truth_table_io.hpp"

namespace pivotal {

namespace {

Json function_json(const LoadedFunction& fn) {
  Json j;
  j["origin"] = fn.origin;
  j["n"] = fn.n;
  j["monotone"] = fn.table ? Json(fn.table->is_monotone()) : Json(nullptr);
  return j;
}

Json header(const char* command, const LoadedFunction& fn) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["function"] = function_json(fn);
  return j;
}

void csv_escape(std::ostringstream& os, const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    os << text;
    return;
  }
  os << '"';
  for (char c : text) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

double grid_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
  }
  if (text.empty() || used != text.size()) {
    throw std::invalid_argument("bad grid value '" + text + "'");
  }
  return v;
}

}  // namespace

LoadedFunction load_table_file(const std::string& path) {
  auto table = read_truth_table(path);
  const int n = table.arity();
  auto oracle = FunctionOracle::from_table(table, "table:" + path);
  return {"table:" + path, n, std::move(table), std::move(oracle)};
}

LoadedFunction load_expression(const std::string& text, std::optional<int> arity) {
  Expr e = parse_expr(text);
  const int n = arity.value_or(std::max(1, e.arity()));
  if (n < e.arity()) throw std::invalid_argument("--n is below the expression's highest variable");
  std::optional<BooleanFunction> table;
  if (n <= kExactCap) table = compile(e, n);
  auto oracle = expr_oracle(e, n);
  return {"expr:" + print_expr(e), n, std::move(table), std::move(oracle)};
}

LoadedFunction load_family(const std::string& text) {
  const auto spec = FamilySpec::parse(text);
  const int n = spec.arity();
  std::optional<BooleanFunction> table;
  if (n <= kExactCap) table = family_table(spec);
  return {"family:" + spec.describe(), n, std::move(table), family_oracle(spec)};
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json check_result_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["p"] = c.p;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["slack"] = c.slack;
  j["tolerance"] = c.tolerance;
  j["holds"] = c.holds;
  j["applicable"] = c.applicable;
  j["notes"] = c.notes;
  return j;
}

Json analysis_block(const BooleanFunction& f, double pv) {
  const Bias p(pv);
  Json b;
  b["p"] = pv;
  b["mean"] = expectation(f, p);
  b["mean_polynomial"] = mean_poly(f)(pv);
  const auto prof = total_influence(f, p);
  Json inf;
  inf["p"] = pv;
  inf["per_coord"] = prof.per_coord;
  inf["total"] = prof.total;
  inf["monotone_input"] = prof.monotone_input;
  b["influence"] = inf;
  if (!p.interior()) {
    b["mean_derivative"] = nullptr;
    b["correlation_xi"] = nullptr;
    b["conditional"] = nullptr;
    b["checks"] = Json::array();
    return b;
  }
  b["mean_derivative"] = mean_derivative(f, p);
  Json corr;
  corr["p"] = pv;
  std::vector<double> values;
  for (int i = 1; i <= f.arity(); ++i) values.push_back(correlation_xi(f, i, p));
  corr["values"] = values;
  corr["with_sn"] = correlation_sn(f, p);
  b["correlation_xi"] = corr;
  if (f.count_ones() > 0) {
    const auto st = conditional_stats(f, p);
    Json c;
    c["p"] = pv;
    c["prob_one"] = st.prob_one;
    c["cond_pivotal"] = st.cond_pivotal;
    c["cond_sn"] = st.cond_sn;
    c["cond_xi"] = st.cond_xi;
    c["cond_pivotal_coord"] = st.cond_pivotal_coord;
    b["conditional"] = c;
  } else {
    b["conditional"] = nullptr;
  }
  Json checks = Json::array();
  const double grid[] = {pv};
  for (const auto& c : run_suite(f, grid)) checks.push_back(check_result_json(c));
  b["checks"] = checks;
  return b;
}

Json etalag_json(const EtalagScan& scan) {
  Json j;
  j["p"] = 0.5;
  j["skipped"] = scan.skipped;
  j["notes"] = scan.notes;
  if (!scan.skipped) {
    j["lhs"] = scan.lhs;
    j["w"] = scan.w;
    j["minimal_k"] = scan.minimal_k ? Json(*scan.minimal_k) : Json(nullptr);
  }
  return j;
}

Json analyze_report(const LoadedFunction& fn, double p) {
  if (!fn.table) throw CapExceeded(fn.n);
  Json r = header("analyze", fn);
  r["blocks"] = Json::array({analysis_block(*fn.table, p)});
  const auto grid = default_k_grid();
  r["etalag_scan"] = etalag_json(etalag_scan(*fn.table, grid));
  return r;
}

Json estimate_json(const SampleEstimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["half_width"] = e.half_width;
  j["lower"] = e.lower();
  j["upper"] = e.upper();
  j["samples"] = e.samples;
  j["delta"] = e.delta;
  j["scale"] = e.scale;
  j["seed"] = e.seed;
  j["generator"] = e.generator;
  j["notes"] = e.notes;
  return j;
}

Json estimated_analyze_report(const LoadedFunction& fn, double p, const SamplingOptions& opts) {
  Json r = header("analyze", fn);
  Json b;
  b["p"] = p;
  b["mean"] = estimate_json(estimate_mean(fn.oracle, p, opts));
  b["total_influence"] = estimate_json(estimate_total_influence(fn.oracle, p, opts));
  r["blocks"] = Json::array({b});
  r["seed"] = opts.seed;
  r["generator"] = kGeneratorId;
  return r;
}

Json checks_report(const LoadedFunction& fn, std::span<const double> grid, const CheckList& checks) {
  Json r = header("check", fn);
  r["p_grid"] = std::vector<double>(grid.begin(), grid.end());
  r["all_hold"] = all_hold(checks);
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(check_result_json(c));
  r["checks"] = arr;
  return r;
}

std::string checks_csv(const CheckList& checks) {
  std::ostringstream os;
  os << "check,p,lhs,rhs,slack,tolerance,holds,applicable,notes\n";
  for (const auto& c : checks) {
    os << c.name << ',' << format_number(c.p) << ',' << format_number(c.lhs) << ','
       << format_number(c.rhs) << ',' << format_number(c.slack) << ','
       << format_number(c.tolerance) << ',' << (c.holds ? 1 : 0) << ',' << (c.applicable ? 1 : 0)
       << ',';
    csv_escape(os, c.notes);
    os << '\n';
  }
  return os.str();
}

std::string sweep_csv(const BooleanFunction& f, std::span<const double> grid) {
  std::ostringstream os;
  os << "p,mean,dmean_dp,total_influence\n";
  for (double pv : grid) {
    const Bias p(pv);
    os << format_number(pv) << ',' << format_number(expectation(f, p)) << ','
       << format_number(mean_derivative(f, p)) << ',' << format_number(total_influence(f, p).total)
       << '\n';
  }
  return os.str();
}

std::string tail_csv(long n, double p, std::span<const double> u_values) {
  std::ostringstream os;
  Bias(p).require_interior("tail");
  if (n < 1) throw std::invalid_argument("tail: n must be positive");
  os << "u,exact,bound_stated,bound_proved\n";
  for (double u : u_values) {
    const auto t = exact_tail(n, p, u);
    os << format_number(u) << ',' << format_number(t.exact) << ',' << format_number(t.bound) << ','
       << format_number(hoeffding_bound(n, p, u, HoeffdingVariant::Proved)) << '\n';
  }
  return os.str();
}

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw std::invalid_argument("grid must look like a:b:steps");
  const double a = grid_number(text.substr(0, c1));
  const double b = grid_number(text.substr(c1 + 1, c2 - c1 - 1));
  const double steps_value = grid_number(text.substr(c2 + 1));
  if (steps_value != std::floor(steps_value) || steps_value > 1e6) {
    throw std::invalid_argument("grid step count must be an integer up to 1e6");
  }
  const int steps = static_cast<int>(steps_value);
  if (steps < 1) throw std::invalid_argument("grid needs at least one step");
  if (steps == 1) return {a};
  std::vector<double> g;
  // Snap to 1e-12 so 0.1:0.9:9 yields 0.3 rather than 0.30000000000000004.
  for (int j = 0; j < steps; ++j) {
    const double v = a + (b - a) * j / (steps - 1);
    g.push_back(std::round(v * 1e12) / 1e12);
  }
  return g;
}

}  // namespace pivotal

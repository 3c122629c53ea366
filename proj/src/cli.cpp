#include "pivotal/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pivotal/errors.hpp"
#include "pivotal/inequalities.hpp"
#include "pivotal/montecarlo.hpp"
#include "pivotal/report.hpp"

namespace pivotal::cli {

namespace {

struct Input {
  std::string table;
  std::string expr;
  std::string family;
  std::optional<int> n;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* group = cmd->add_option_group("input", "function to analyze");
  group->add_option("--table", in.table, "truth table file");
  group->add_option("--expr", in.expr, "expression, e.g. MAJ(x1,x2,x3)");
  group->add_option("--family", in.family, "named family, e.g. majority:101 or tribes:3,4");
  group->require_option(1);
  cmd->add_option("--n", in.n, "arity for --expr (defaults to the highest variable)");
}

LoadedFunction load(const Input& in) {
  if (!in.table.empty()) return load_table_file(in.table);
  if (!in.expr.empty()) return load_expression(in.expr, in.n);
  return load_family(in.family);
}

const BooleanFunction& exact_table(const LoadedFunction& fn) {
  if (!fn.table) throw CapExceeded(fn.n);
  return *fn.table;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int check_exit_code(const CheckList& checks) {
  return all_hold(checks) ? kExitOk : kExitCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pivotal sets, influences and concentration bounds for boolean functions",
               "pivotal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Input in;
  std::string out_path;
  std::string format = "json";
  double p = 0.5;
  std::string grid_text = "0.1:0.9:9";
  SamplingOptions sampling;
  bool use_estimate = false;
  std::optional<int> coord;
  std::optional<int> subsample;
  long tail_n = 0;
  std::vector<std::string> u_text;

  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--m", sampling.samples, "sample count")->capture_default_str();
    cmd->add_option("--delta", sampling.delta, "confidence parameter")->capture_default_str();
    cmd->add_option("--seed", sampling.seed, "64-bit seed")->capture_default_str();
    cmd->add_option("--workers", sampling.workers, "worker threads")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "full report at one p");
  add_input(analyze, in);
  analyze->add_option("--p", p, "bias")->capture_default_str();
  analyze->add_flag("--estimate", use_estimate, "sample instead of failing above the exact cap");
  add_sampling(analyze);
  analyze->add_option("--out", out_path, "output file");

  auto* check = app.add_subcommand("check", "run the inequality suite over a p grid");
  add_input(check, in);
  check->add_option("--p-grid", grid_text, "a:b:steps")->capture_default_str();
  check->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  check->add_option("--out", out_path, "output file");

  auto* sweep = app.add_subcommand("sweep", "CSV of E(f), dE/dp and total influence over p");
  add_input(sweep, in);
  sweep->add_option("--p-grid", grid_text, "a:b:steps with 0<a<b<1, steps>=2")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "output file");

  auto* tail = app.add_subcommand("tail", "exact binomial tail against the Hoeffding bounds");
  tail->add_option("--n", tail_n, "number of coins")->required();
  tail->add_option("--p", p, "bias")->capture_default_str();
  tail->add_option("--u", u_text, "deviations in units of S_n, space or comma separated")
      ->expected(0, -1)
      ->delimiter(',');
  tail->add_option("--out", out_path, "output file");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimates with Hoeffding intervals");
  add_input(estimate, in);
  estimate->add_option("--p", p, "bias")->capture_default_str();
  estimate->add_option("--coord", coord, "estimate the influence of this coordinate only");
  estimate->add_option("--subsample", subsample, "coordinates inspected per sample");
  add_sampling(estimate);
  estimate->add_option("--out", out_path, "output file");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("pivotal");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (analyze->parsed()) {
      const auto fn = load(in);
      Json report;
      if (fn.table) {
        report = analyze_report(fn, p);
      } else if (use_estimate) {
        report = estimated_analyze_report(fn, p, sampling);
      } else {
        throw CapExceeded(fn.n);
      }
      emit(dump(report), out_path, out);
      return kExitOk;
    }
    if (check->parsed()) {
      const auto fn = load(in);
      const auto grid = parse_grid(grid_text);
      const auto checks = run_suite(exact_table(fn), grid);
      emit(format == "csv" ? checks_csv(checks) : dump(checks_report(fn, grid, checks)), out_path,
           out);
      return check_exit_code(checks);
    }
    if (sweep->parsed()) {
      const auto fn = load(in);
      const auto grid = parse_grid(grid_text);
      if (grid.size() < 2 || !(grid.front() > 0.0 && grid.front() < grid.back() &&
                               grid.back() < 1.0)) {
        throw std::invalid_argument("sweep needs 0 < a < b < 1 and at least 2 steps");
      }
      emit(sweep_csv(exact_table(fn), grid), out_path, out);
      return kExitOk;
    }
    if (tail->parsed()) {
      std::vector<double> u_values;
      for (const auto& t : u_text) {
        if (t.empty()) continue;
        std::size_t used = 0;
        double u = 0.0;
        try {
          u = std::stod(t, &used);
        } catch (const std::exception&) {
        }
        if (used != t.size()) throw std::invalid_argument("bad --u value '" + t + "'");
        u_values.push_back(u);
      }
      emit(tail_csv(tail_n, p, u_values), out_path, out);
      return kExitOk;
    }
    if (estimate->parsed()) {
      const auto fn = load(in);
      Json r;
      r["schema"] = kReportSchema;
      r["tool_version"] = kToolVersion;
      r["command"] = "estimate";
      r["function"] = {{"origin", fn.origin}, {"n", fn.n}};
      r["p"] = p;
      r["seed"] = sampling.seed;
      r["generator"] = kGeneratorId;
      if (coord) {
        r["influence"] = estimate_json(estimate_influence(fn.oracle, *coord, p, sampling));
        r["influence"]["coord"] = *coord;
      } else {
        r["mean"] = estimate_json(estimate_mean(fn.oracle, p, sampling));
        r["total_influence"] =
            estimate_json(estimate_total_influence(fn.oracle, p, sampling, subsample));
      }
      emit(dump(r), out_path, out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace pivotal::cli

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pivotal/boolean_function.hpp"
#include "pivotal/check_result.hpp"
#include "pivotal/inequalities.hpp"
#include "pivotal/montecarlo.hpp"

namespace pivotal {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "pivotal.report/1";

using Json = nlohmann::ordered_json;

/// A function loaded from a table file, an expression or a family spec. The
/// table is present iff n <= kExactCap.
struct LoadedFunction {
  std::string origin;
  int n = 0;
  std::optional<BooleanFunction> table;
  FunctionOracle oracle;
};

LoadedFunction load_table_file(const std::string& path);
/// `arity` forces a larger n than the highest variable index.
LoadedFunction load_expression(const std::string& text, std::optional<int> arity = std::nullopt);
LoadedFunction load_family(const std::string& spec);

/// Shortest round-trip rendering used for every CSV number.
std::string format_number(double v);

/// One analysis block at a single p: mean, dE/dp, influences, correlations,
/// conditional statistics and the check suite. Character-dependent fields are
/// null at p ∈ {0,1}.
Json analysis_block(const BooleanFunction& f, double p);

Json analyze_report(const LoadedFunction& fn, double p);

/// Sampled variant of analyze_report for arities above the exact cap.
Json estimated_analyze_report(const LoadedFunction& fn, double p, const SamplingOptions& opts);

Json check_result_json(const CheckResult& c);
Json checks_report(const LoadedFunction& fn, std::span<const double> grid, const CheckList& checks);

/// Header: check,p,lhs,rhs,slack,tolerance,holds,applicable,notes
std::string checks_csv(const CheckList& checks);

/// Header: p,mean,dmean_dp,total_influence
std::string sweep_csv(const BooleanFunction& f, std::span<const double> grid);

/// Header: u,exact,bound_stated,bound_proved
std::string tail_csv(long n, double p, std::span<const double> u_values);

Json estimate_json(const SampleEstimate& e);
Json etalag_json(const EtalagScan& scan);

/// "a:b:steps" -> steps evenly spaced points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text);

}  // namespace pivotal

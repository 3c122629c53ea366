#pragma once

#include <string>
#include <vector>

namespace pivotal {

/// Verdict of one inequality `lhs <= rhs`.
///
/// holds = lhs <= rhs + tolerance; slack = rhs - lhs. Identities are reported
/// as two one-sided results (a <= b and b <= a). When `applicable` is false the
/// preconditions failed and `holds` carries no information.
struct CheckResult {
  std::string name;
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool holds = true;
  bool applicable = true;
  std::string notes;
};

using CheckList = std::vector<CheckResult>;

/// Default relative scale for the tolerance: 1e-12 · max(1, |lhs|, |rhs|).
inline constexpr double kCheckRelTol = 1e-12;

CheckResult make_check(std::string name, double p, double lhs, double rhs,
                       double rel_tol = kCheckRelTol);

CheckResult inapplicable(std::string name, double p, std::string why);

/// Two one-sided checks a <= b and b <= a at the given relative tolerance.
CheckList equality_check(const std::string& name, double p, double a, double b, double rel_tol);

bool all_hold(const CheckList& checks);

}  // namespace pivotal

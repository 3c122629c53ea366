#include "pivotal/check_result.hpp"

#include <algorithm>
#include <cmath>

namespace pivotal {

CheckResult make_check(std::string name, double p, double lhs, double rhs, double rel_tol) {
  CheckResult r;
  r.name = std::move(name);
  r.p = p;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = rel_tol * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  r.holds = lhs <= rhs + r.tolerance;
  return r;
}

CheckResult inapplicable(std::string name, double p, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.p = p;
  r.applicable = false;
  r.holds = true;
  r.notes = std::move(why);
  return r;
}

CheckList equality_check(const std::string& name, double p, double a, double b, double rel_tol) {
  return {make_check(name + ".le", p, a, b, rel_tol), make_check(name + ".ge", p, b, a, rel_tol)};
}

bool all_hold(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.applicable || c.holds; });
}

}  // namespace pivotal

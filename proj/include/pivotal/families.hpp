#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pivotal/boolean_function.hpp"

namespace pivotal {

/// Named function families. Table builders require n <= kExactCap; the
/// matching oracle builders work at any arity.
namespace family {

BooleanFunction dictator(int n, int i);
/// Strict majority; n must be odd.
BooleanFunction majority(int n);
BooleanFunction parity(int n);
BooleanFunction conjunction(int n);
BooleanFunction disjunction(int n);
/// OR of `tribes` disjoint ANDs, each over `width` consecutive coordinates.
BooleanFunction tribes(int width, int tribes);
/// 1 iff Σ weights[i-1]·ω(i) >= theta.
BooleanFunction threshold(const std::vector<double>& weights, double theta);
BooleanFunction constant(int n, bool value);

}  // namespace family

/// Parsed family descriptor, e.g. "majority:101", "tribes:2,2",
/// "threshold:1,2,3/3", "constant:4,1".
struct FamilySpec {
  std::string name;
  std::vector<double> params;
  double theta = 0.0;  // threshold only

  static FamilySpec parse(std::string_view text);
  int arity() const;
  std::string describe() const;
};

BooleanFunction family_table(const FamilySpec& spec);
FunctionOracle family_oracle(const FamilySpec& spec);

}  // namespace pivotal

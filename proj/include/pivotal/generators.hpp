#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pivotal/boolean_function.hpp"

namespace pivotal {

/// Every monotone Boolean function of arity n (n <= 5), built recursively: a
/// monotone f on n variables splits on ω(n) into monotone g0 <= g1 on n-1
/// variables. The sizes are the Dedekind numbers 3, 6, 20, 168, 7581.
std::vector<BooleanFunction> all_monotone(int n);

/// Up-closure of a random generator set: each configuration is a minimal
/// element candidate with probability `density`.
BooleanFunction random_monotone(int n, std::mt19937_64& rng, double density);

/// Uniformly random truth table.
BooleanFunction random_function(int n, std::mt19937_64& rng);

/// Smallest monotone function above f: f'(ω) = max over η <= ω of f(η).
BooleanFunction upward_closure(const BooleanFunction& f);

}  // namespace pivotal

#include "pivotal/families.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pivotal {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

void require_odd_majority(int n) {
  require_positive(n, "majority arity");
  if (n % 2 == 0) throw std::invalid_argument("majority requires an odd number of inputs");
}

bool tribes_value(const Configuration& omega, int width, int count) {
  for (int t = 0; t < count; ++t) {
    bool all = true;
    for (int j = 1; j <= width && all; ++j) all = omega.get(t * width + j);
    if (all) return true;
  }
  return false;
}

double threshold_sum(const Configuration& omega, const std::vector<double>& weights) {
  double s = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (omega.get(static_cast<int>(k) + 1)) s += weights[k];
  }
  return s;
}

int as_int(double v, const char* what) {
  if (v != std::floor(v)) throw std::invalid_argument(std::string(what) + " must be an integer");
  return static_cast<int>(v);
}

}  // namespace

namespace family {

BooleanFunction dictator(int n, int i) {
  require_positive(n, "arity");
  if (i < 1 || i > n) throw std::out_of_range("dictator coordinate out of range");
  return BooleanFunction::tabulate(n, [i](std::uint64_t x) { return bits::get(x, i); });
}

BooleanFunction majority(int n) {
  require_odd_majority(n);
  return BooleanFunction::tabulate(n, [n](std::uint64_t x) { return 2 * std::popcount(x) > n; });
}

BooleanFunction parity(int n) {
  require_positive(n, "arity");
  return BooleanFunction::tabulate(n, [](std::uint64_t x) { return (std::popcount(x) & 1) != 0; });
}

BooleanFunction conjunction(int n) {
  require_positive(n, "arity");
  return BooleanFunction::tabulate(n, [n](std::uint64_t x) { return std::popcount(x) == n; });
}

BooleanFunction disjunction(int n) {
  require_positive(n, "arity");
  return BooleanFunction::tabulate(n, [](std::uint64_t x) { return x != 0; });
}

BooleanFunction tribes(int width, int count) {
  require_positive(width, "tribe width");
  require_positive(count, "tribe count");
  const int n = width * count;
  const std::uint64_t block = (std::uint64_t{1} << width) - 1;
  return BooleanFunction::tabulate(n, [=](std::uint64_t x) {
    for (int t = 0; t < count; ++t) {
      if (((x >> (t * width)) & block) == block) return true;
    }
    return false;
  });
}

BooleanFunction threshold(const std::vector<double>& weights, double theta) {
  const int n = static_cast<int>(weights.size());
  require_positive(n, "threshold arity");
  return BooleanFunction::tabulate(n, [&](std::uint64_t x) {
    double s = 0.0;
    for (int i = 1; i <= n; ++i) {
      if (bits::get(x, i)) s += weights[static_cast<std::size_t>(i - 1)];
    }
    return s >= theta;
  });
}

BooleanFunction constant(int n, bool value) {
  require_positive(n, "arity");
  return BooleanFunction::tabulate(n, [value](std::uint64_t) { return value; });
}

}  // namespace family

namespace {

double parse_number(const std::string& item) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(item, &used);
  } catch (const std::exception&) {
  }
  if (item.empty() || used != item.size()) {
    throw std::invalid_argument("bad family parameter '" + item + "'");
  }
  return v;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family spec must look like name:params");
  }
  std::string rest(text.substr(colon + 1));
  if (spec.name == "threshold") {
    const auto slash = rest.find('/');
    if (slash == std::string::npos) {
      throw std::invalid_argument("threshold family needs weights/theta");
    }
    spec.theta = parse_number(rest.substr(slash + 1));
    rest = rest.substr(0, slash);
  }
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    spec.params.push_back(parse_number(item));
  }
  spec.arity();  // validates name and parameter count
  return spec;
}

int FamilySpec::arity() const {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + name + "' expects " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  int n = 0;
  if (name == "dictator" || name == "constant" || name == "tribes") {
    need(2);
    n = as_int(params[0], "parameter");
    if (name == "tribes") n *= as_int(params[1], "parameter");
  } else if (name == "majority" || name == "parity" || name == "and" || name == "or") {
    need(1);
    n = as_int(params[0], "arity");
  } else if (name == "threshold") {
    n = static_cast<int>(params.size());
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  if (n < 1) throw std::invalid_argument("family parameters must be positive");
  if (name == "majority") require_odd_majority(n);
  if (name == "tribes") {
    require_positive(as_int(params[0], "tribe width"), "tribe width");
    require_positive(as_int(params[1], "tribe count"), "tribe count");
  }
  if (name == "dictator") {
    const int i = as_int(params[1], "coordinate");
    if (i < 1 || i > n) throw std::out_of_range("dictator coordinate out of range");
  }
  return n;
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << name << '(';
  for (std::size_t k = 0; k < params.size(); ++k) os << (k ? "," : "") << params[k];
  if (name == "threshold") os << ";" << theta;
  os << ')';
  return os.str();
}

BooleanFunction family_table(const FamilySpec& spec) {
  const int n = spec.arity();
  require_exact(n);
  const auto& a = spec.params;
  if (spec.name == "dictator") return family::dictator(n, static_cast<int>(a[1]));
  if (spec.name == "majority") return family::majority(n);
  if (spec.name == "parity") return family::parity(n);
  if (spec.name == "and") return family::conjunction(n);
  if (spec.name == "or") return family::disjunction(n);
  if (spec.name == "tribes") return family::tribes(static_cast<int>(a[0]), static_cast<int>(a[1]));
  if (spec.name == "threshold") return family::threshold(a, spec.theta);
  return family::constant(n, a[1] != 0.0);
}

FunctionOracle family_oracle(const FamilySpec& spec) {
  const int n = spec.arity();
  const auto& a = spec.params;
  FunctionOracle::Eval eval;
  if (spec.name == "dictator") {
    eval = [i = static_cast<int>(a[1])](const Configuration& w) { return w.get(i); };
  } else if (spec.name == "majority") {
    eval = [n](const Configuration& w) { return 2 * w.weight() > n; };
  } else if (spec.name == "parity") {
    eval = [](const Configuration& w) { return (w.weight() & 1) != 0; };
  } else if (spec.name == "and") {
    eval = [n](const Configuration& w) { return w.weight() == n; };
  } else if (spec.name == "or") {
    eval = [](const Configuration& w) { return w.weight() > 0; };
  } else if (spec.name == "tribes") {
    eval = [width = static_cast<int>(a[0]), count = static_cast<int>(a[1])](
               const Configuration& w) { return tribes_value(w, width, count); };
  } else if (spec.name == "threshold") {
    eval = [weights = a, theta = spec.theta](const Configuration& w) {
      return threshold_sum(w, weights) >= theta;
    };
  } else {
    eval = [value = a[1] != 0.0](const Configuration&) { return value; };
  }
  return FunctionOracle(n, std::move(eval), spec.describe());
}

}  // namespace pivotal

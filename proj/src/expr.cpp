#include "pivotal/expr.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "pivotal/errors.hpp"

namespace pivotal {

namespace {

constexpr int kMaxDepth = 4096;

const char* keyword(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Not: return "NOT";
    case Expr::Kind::And: return "AND";
    case Expr::Kind::Or: return "OR";
    case Expr::Kind::Xor: return "XOR";
    case Expr::Kind::Maj: return "MAJ";
    default: return "";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expr e = expr(0);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Expr expr(int depth) {
    if (depth > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return Expr::constant(c == '1');
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      if (pos_ == digits) throw ParseError("expected variable index after 'x'", pos_);
      int index = 0;
      const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, index);
      if (ec != std::errc()) throw ParseError("variable index too large", digits);
      if (index == 0) throw ParseError("variable index 0 (indices start at 1)", start);
      return Expr::variable(index);
    }
    while (pos_ < text_.size() && text_[pos_] >= 'A' && text_[pos_] <= 'Z') ++pos_;
    const auto word = text_.substr(start, pos_ - start);
    Expr::Kind kind;
    if (word == "NOT") {
      kind = Expr::Kind::Not;
    } else if (word == "AND") {
      kind = Expr::Kind::And;
    } else if (word == "OR") {
      kind = Expr::Kind::Or;
    } else if (word == "XOR") {
      kind = Expr::Kind::Xor;
    } else if (word == "MAJ") {
      kind = Expr::Kind::Maj;
    } else {
      throw ParseError("expected variable, constant or operator", start);
    }
    expect('(');
    std::vector<Expr> children;
    children.push_back(expr(depth + 1));
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      children.push_back(expr(depth + 1));
      skip_ws();
    }
    expect(')');
    if (kind == Expr::Kind::Not) {
      if (children.size() != 1) throw ParseError("NOT takes exactly one argument", start);
      return Expr::negation(std::move(children.front()));
    }
    if (children.size() < 2) {
      throw ParseError(std::string(keyword(kind)) + " needs at least two arguments", start);
    }
    if (kind == Expr::Kind::Maj && children.size() % 2 == 0) {
      throw ParseError("even-arity MAJ", start);
    }
    return Expr::gate(kind, std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Var:
      out += 'x';
      out += std::to_string(e.var);
      return;
    case Expr::Kind::Const:
      out += e.value ? '1' : '0';
      return;
    default:
      out += keyword(e.kind);
      out += '(';
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k) out += ", ";
        print_into(e.children[k], out);
      }
      out += ')';
  }
}

using Table = std::vector<std::uint64_t>;

std::uint64_t live_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

Table variable_table(int i, int n) {
  Table t(BooleanFunction::word_count(n), 0);
  if (i <= 6) {
    std::uint64_t pattern = 0;
    for (int b = 0; b < 64; ++b) {
      if ((b >> (i - 1)) & 1) pattern |= std::uint64_t{1} << b;
    }
    for (auto& w : t) w = pattern & live_mask(n);
  } else {
    const std::size_t stride = std::size_t{1} << (i - 7);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j & stride) t[j] = ~std::uint64_t{0};
    }
  }
  return t;
}

// Bit-sliced test "count of ones among `words` > words.size()/2".
std::uint64_t majority_word(const std::vector<std::uint64_t>& words) {
  std::vector<std::uint64_t> planes;
  for (auto w : words) {
    std::uint64_t carry = w;
    for (auto& plane : planes) {
      const std::uint64_t t = plane & carry;
      plane ^= carry;
      carry = t;
    }
    if (carry) planes.push_back(carry);
  }
  const std::size_t needed = words.size() / 2 + 1;
  std::uint64_t gt = 0;
  std::uint64_t eq = ~std::uint64_t{0};
  // Plane count may be short of the bits of `needed`; missing planes are zero.
  std::size_t bits_needed = 0;
  while ((needed >> bits_needed) != 0) ++bits_needed;
  const std::size_t top = std::max(bits_needed, planes.size());
  for (std::size_t b = top; b-- > 0;) {
    const std::uint64_t plane = b < planes.size() ? planes[b] : 0;
    if ((needed >> b) & 1U) {
      eq &= plane;
    } else {
      gt |= eq & plane;
      eq &= ~plane;
    }
  }
  return gt | eq;
}

Table compile_table(const Expr& e, int n) {
  const std::size_t words = BooleanFunction::word_count(n);
  const std::uint64_t live = live_mask(n);
  switch (e.kind) {
    case Expr::Kind::Var:
      return variable_table(e.var, n);
    case Expr::Kind::Const:
      return Table(words, e.value ? live : 0);
    case Expr::Kind::Not: {
      Table t = compile_table(e.children.front(), n);
      for (auto& w : t) w = ~w & live;
      return t;
    }
    default:
      break;
  }
  std::vector<Table> kids;
  kids.reserve(e.children.size());
  for (const auto& c : e.children) kids.push_back(compile_table(c, n));
  Table out(words, 0);
  std::vector<std::uint64_t> column(kids.size());
  for (std::size_t j = 0; j < words; ++j) {
    for (std::size_t k = 0; k < kids.size(); ++k) column[k] = kids[k][j];
    std::uint64_t w = 0;
    switch (e.kind) {
      case Expr::Kind::And:
        w = ~std::uint64_t{0};
        for (auto c : column) w &= c;
        break;
      case Expr::Kind::Or:
        for (auto c : column) w |= c;
        break;
      case Expr::Kind::Xor:
        for (auto c : column) w ^= c;
        break;
      case Expr::Kind::Maj:
        w = majority_word(column);
        break;
      default:
        break;
    }
    out[j] = w & live;
  }
  return out;
}

bool eval_node(const Expr& e, const Configuration& omega) {
  switch (e.kind) {
    case Expr::Kind::Var: return omega.get(e.var);
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Not: return !eval_node(e.children.front(), omega);
    case Expr::Kind::And:
      return std::all_of(e.children.begin(), e.children.end(),
                         [&](const Expr& c) { return eval_node(c, omega); });
    case Expr::Kind::Or:
      return std::any_of(e.children.begin(), e.children.end(),
                         [&](const Expr& c) { return eval_node(c, omega); });
    case Expr::Kind::Xor: {
      bool acc = false;
      for (const auto& c : e.children) acc ^= eval_node(c, omega);
      return acc;
    }
    case Expr::Kind::Maj: {
      std::size_t ones = 0;
      for (const auto& c : e.children) ones += eval_node(c, omega) ? 1 : 0;
      return 2 * ones > e.children.size();
    }
  }
  return false;
}

}  // namespace

Expr Expr::variable(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  Expr e;
  e.kind = Kind::Var;
  e.var = index;
  return e;
}

Expr Expr::constant(bool b) {
  Expr e;
  e.kind = Kind::Const;
  e.value = b;
  return e;
}

Expr Expr::negation(Expr child) {
  Expr e;
  e.kind = Kind::Not;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::gate(Kind kind, std::vector<Expr> children) {
  if (kind == Kind::Var || kind == Kind::Const || kind == Kind::Not) {
    throw std::invalid_argument("gate kind must be AND, OR, XOR or MAJ");
  }
  if (children.size() < 2) throw std::invalid_argument("gates need at least two children");
  if (kind == Kind::Maj && children.size() % 2 == 0) {
    throw std::invalid_argument("MAJ needs an odd number of children");
  }
  Expr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

int Expr::arity() const {
  if (kind == Kind::Var) return var;
  int n = 0;
  for (const auto& c : children) n = std::max(n, c.arity());
  return n;
}

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

bool eval_expr(const Expr& e, const Configuration& omega) {
  if (omega.arity() < e.arity()) {
    throw std::invalid_argument("configuration arity " + std::to_string(omega.arity()) +
                                " is smaller than expression arity " +
                                std::to_string(e.arity()));
  }
  return eval_node(e, omega);
}

BooleanFunction compile(const Expr& e, int n) {
  require_exact(n);
  if (n < e.arity()) {
    throw std::invalid_argument("compile arity " + std::to_string(n) +
                                " below expression arity " + std::to_string(e.arity()));
  }
  return BooleanFunction(n, compile_table(e, n));
}

FunctionOracle expr_oracle(Expr e, int n) {
  if (n < e.arity()) throw std::invalid_argument("oracle arity below expression arity");
  std::string origin = "expr:" + print_expr(e);
  return FunctionOracle(
      n, [expr = std::move(e)](const Configuration& omega) { return eval_node(expr, omega); },
      std::move(origin));
}

}  // namespace pivotal

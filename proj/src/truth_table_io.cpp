#include "pivotal/truth_table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pivotal {

namespace {

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

BooleanFunction parse_truth_table(std::string_view text) {
  const auto eol = text.find('\n');
  if (eol == std::string_view::npos) throw std::runtime_error("truth table: missing table line");
  const auto header = strip_cr(text.substr(0, eol));
  if (header.substr(0, 2) != "n=") throw std::runtime_error("truth table: header must be n=<k>");
  int n = 0;
  const auto digits = header.substr(2);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::runtime_error("truth table: bad arity in header");
  }
  if (n < 1 || n > kExactCap) throw std::runtime_error("truth table: arity out of range");

  auto body = text.substr(eol + 1);
  if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
  body = strip_cr(body);
  if (body.find('\n') != std::string_view::npos) {
    throw std::runtime_error("truth table: unexpected extra lines");
  }
  const std::size_t expected = std::size_t{1} << n;
  if (body.size() != expected) {
    throw std::runtime_error("truth table: expected " + std::to_string(expected) +
                             " entries, found " + std::to_string(body.size()));
  }
  try {
    return BooleanFunction::from_bits(n, body);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("truth table: ") + e.what());
  }
}

BooleanFunction read_truth_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_truth_table(ss.str());
}

std::string format_truth_table(const BooleanFunction& f) {
  return "n=" + std::to_string(f.arity()) + "\n" + f.to_bits() + "\n";
}

void write_truth_table(const std::filesystem::path& path, const BooleanFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_truth_table(f);
}

}  // namespace pivotal

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivotal {

/// Raised when an exact (truth-table) computation is requested above the arity cap.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(int n);
  int arity() const noexcept { return n_; }

 private:
  int n_;
};

/// Conditioning on an event of probability zero, e.g. E(. | f=1) for f == 0.
class UndefinedConditional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Syntax or semantic error in the expression language; carries the byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace pivotal

#pragma once

#include <stdexcept>
#include <string>

namespace stolarsky {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
  division_by_zero() : error("division by zero") {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

struct varset_mismatch : error {
  varset_mismatch() : error("operands use different variable sets") {}
};

struct order_mismatch : error {
  order_mismatch() : error("series truncation orders differ") {}
};

/// A radical component survived where a radical-free value was required.
struct parity_error : error {
  explicit parity_error(const std::string& what) : error("parity: " + what) {}
};

struct unknown_case : error {
  explicit unknown_case(const std::string& what) : error("unknown case: " + what) {}
};

/// Invalid numeric input (e.g. nonpositive mean argument).
struct bad_input : error {
  explicit bad_input(const std::string& what) : error(what) {}
};

}  // namespace stolarsky

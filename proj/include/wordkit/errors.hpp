#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordkit {

// Base class for everything this library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands built over different alphabets.
struct alphabet_mismatch : error {
  using error::error;
};

// A position or index outside the word it refers to.
struct bounds_error : error {
  using error::error;
};

// Rejected input value: p < 2, empty pattern, empty factor, and the like.
struct parameter_error : error {
  using error::error;
};

// A hard cap was hit (factorial permutation check, C! term expansion).
struct limit_error : error {
  using error::error;
};

// Text that does not parse; `index` is the 1-based offending position.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t index)
      : error(what), index(index) {}
  std::size_t index;
};

struct insufficient_occurrences : error {
  using error::error;
};

struct insufficient_complexity : error {
  using error::error;
};

// Prefix shorter than the construction needs; carries the needed length.
struct prefix_too_short : error {
  prefix_too_short(const std::string& what, std::size_t required)
      : error(what), required_length(required) {}
  std::size_t required_length;
};

// An emitted certificate failed its own invariant check; names the clause.
struct construction_failed : error {
  construction_failed(const std::string& what, std::string clause)
      : error(what), clause(std::move(clause)) {}
  std::string clause;
};

struct dimension_mismatch : error {
  using error::error;
};

struct arithmetic_overflow : error {
  using error::error;
};

}  // namespace wordkit

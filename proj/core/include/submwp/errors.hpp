#pragma once

#include <stdexcept>
#include <string>

namespace submwp {

/// Invalid input value (element outside ground set, non-simplex vector, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem size exceeds an exhaustive-computation limit or a search budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what, std::uint64_t required = 0)
      : std::runtime_error(what), required_states(required) {}
  std::uint64_t required_states;
};

/// Non-finite value surfaced from an oracle or solver iterate.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed; always a bug, never an input problem.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input file. `pointer` is a JSON-pointer-ish path to the offender.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string ptr)
      : std::runtime_error(what + " (at " + ptr + ")"), pointer(std::move(ptr)) {}
  std::string pointer;
};

}  // namespace submwp

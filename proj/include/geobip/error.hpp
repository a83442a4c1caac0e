#pragma once

#include <stdexcept>
#include <string>

namespace geobip {

/// Malformed input text (coordinates, JSON documents, CLI arguments).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input violates a precondition of the chosen algorithm (general
/// position for the sweep, uniform dimension for balls, ...).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace geobip

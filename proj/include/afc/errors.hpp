#pragma once
#include <stdexcept>
#include <string>

namespace afc {

// Malformed or out-of-contract input (syntax, dimensions, missing blocks).
struct ParseError : std::runtime_error {
  int line;
  explicit ParseError(const std::string& msg, int line_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// A computed object failed its own postcondition checks. For the Lie-level
// operations this signals input outside the declared contract (e.g. a matrix
// algebra that is not the Lie algebra of an algebraic group), not a bug in
// the caller's file.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace afc

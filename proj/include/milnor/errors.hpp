#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

/// Malformed or out-of-contract input (bad dimensions, syntax errors, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but outside what the engine handles
/// (non-isolated singularities, no jet stabilization, ...).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed window or bound is too small to decide the question asked.
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace milnor

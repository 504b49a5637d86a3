#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdc {

// Arithmetic between values built for different deformation contexts
// (different N, hence different meaning of q = p^N).
struct MixedContextError : std::invalid_argument {
  explicit MixedContextError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DivideByZeroError : std::domain_error {
  explicit DivideByZeroError(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation at a pole or at a degenerate point (p0 in {0, 1, -1}).
struct EvalError : std::domain_error {
  explicit EvalError(const std::string& msg) : std::domain_error(msg) {}
};

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Graded-commutator or substitution input violating parity constraints.
struct ParityError : std::invalid_argument {
  explicit ParityError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A relation family that cannot be compiled into oriented rules.
struct OrientError : std::runtime_error {
  explicit OrientError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rewrite step cap exceeded; diagnostic for non-terminating rule sets.
struct ReduceLimitError : std::runtime_error {
  explicit ReduceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-verification failed (e.g. Hecke inverse does not invert).
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

}  // namespace qdc

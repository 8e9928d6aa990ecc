#pragma once

#include <stdexcept>
#include <string>

namespace macrocheck {

/// Operands do not fit together: mismatched variable sets, exponent vectors
/// of the wrong length, unassigned variables, malformed text.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is well-formed but carries no answer (e.g. degree of the zero polynomial).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace macrocheck

#pragma once

#include <stdexcept>
#include <string>

namespace gemcalc {

// Root of every error the library throws.
class GemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed gem/metadata document, or a document violating the graph invariants.
class ParseError : public GemError {
 public:
  using GemError::GemError;
};

// Structural violation when building a ColoredGraph (loop, non-involution, ...).
class ValidationError : public GemError {
 public:
  using GemError::GemError;
};

// An operation was called outside its domain (wrong dimension, disconnected graph, ...).
class PreconditionError : public GemError {
 public:
  using GemError::GemError;
};

// A quantity that must hold as a theorem did not. Always a bug or inconsistent input.
class InvariantViolation : public GemError {
 public:
  using GemError::GemError;
};

}  // namespace gemcalc

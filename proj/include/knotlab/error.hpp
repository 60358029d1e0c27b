#pragma once

#include <stdexcept>
#include <string>

namespace knotlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial arithmetic misuse: variable mismatch, degree of zero, bad substitution.
class PolyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called on a diagram or graph outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource limit (state-sum cap, skein budget) was hit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotlab

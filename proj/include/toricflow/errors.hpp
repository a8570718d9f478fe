#pragma once

#include <stdexcept>
#include <string>

namespace toricflow {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand lengths or matrix shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (zero ray, k > n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Ray generators are linearly dependent.
class NotSimplicialError : public Error {
 public:
  using Error::Error;
};

/// A geometric hypothesis required by an operation does not hold
/// (irregular face, cone not smooth in codimension 2, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace toricflow

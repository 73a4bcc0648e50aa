#pragma once

#include <stdexcept>
#include <string>

namespace densest {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text, bad index, duplicate vertex in an edge.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input violating a weight-table or instance invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotConvexError : public Error {
 public:
  using Error::Error;
};

class NotAllConcaveError : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range algorithm parameter (epsilon, generator sizes, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace densest

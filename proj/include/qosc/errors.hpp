#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in the parameter field") {}
};

class EvalPole : public Error {
 public:
  explicit EvalPole(const std::string& what) : Error("pole at evaluation point: " + what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Rewriting exceeded its step budget (usually a badly oriented rule).
class Divergence : public Error {
 public:
  using Error::Error;
};

class StarUndefined : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InadmissibleParams : public Error {
 public:
  using Error::Error;
};

}  // namespace qosc

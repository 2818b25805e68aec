#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylgb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division would need the inverse of a coefficient that involves a, b or c_i.
class ParameterLeadingCoefficient : public Error {
public:
  using Error::Error;
};

/// Operands live in different variable contexts.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

class ZeroElement : public Error {
public:
  using Error::Error;
};

class NegativeWeightSum : public Error {
public:
  using Error::Error;
};

class NonHomogeneousInput : public Error {
public:
  using Error::Error;
};

class NonSquarefree : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

/// The order is not admissible for the requested algorithm (e.g. a negative
/// first weight in the plain Weyl algebra).
class InvalidOrder : public Error {
public:
  using Error::Error;
};

/// Exponent matrix of a monomial change of variables is not invertible over Q.
class SingularChange : public Error {
public:
  using Error::Error;
};

/// A coefficient still depends on a parameter where a rational was required.
class UnspecializedParameter : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class UnknownSymbol : public Error {
public:
  UnknownSymbol(std::size_t offset, const std::string& symbol)
      : Error("unknown symbol '" + symbol + "' at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace weylgb

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpoint {

/// Base class of every error raised by the engine. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// The stored precision is too small to decide the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ValuationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroSeries : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class DependentInput : public Error {
 public:
  using Error::Error;
};

class NotInSpace : public Error {
 public:
  using Error::Error;
};

/// Monomial rank below dim S^H_m on a curve where the monomials must span it.
class RankDeficit : public Error {
 public:
  using Error::Error;
};

class HyperellipticUnsupported : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wpoint

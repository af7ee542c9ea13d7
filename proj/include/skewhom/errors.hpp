#pragma once

#include <stdexcept>
#include <string>

namespace skewhom {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two scalars from different backends (or different discriminants) met.
struct BackendMismatch : Error {
  using Error::Error;
};

/// Inversion of a zero divisor (or of zero).
struct ZeroDivisor : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// An algebra or representation violates a structural invariant
/// (antisymmetry, matching dimensions, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Malformed input text. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source(std::move(source)),
        line(line) {}

  std::string source;
  std::size_t line;
};

}  // namespace skewhom

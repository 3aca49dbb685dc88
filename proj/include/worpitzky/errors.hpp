#pragma once

#include <stdexcept>
#include <string>

namespace worpitzky {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar, sequence or b-file text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A fraction literal with a zero denominator ("3/0").
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a formula (e.g. AWNT(0, k)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index past the end of a sequence or b-file.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// No row of the difference table is constant within the observed window.
class NotPolynomialError : public Error {
 public:
  NotPolynomialError(const std::string& what, std::size_t deepest_row)
      : Error(what), deepest_row_(deepest_row) {}
  std::size_t deepest_row() const noexcept { return deepest_row_; }

 private:
  std::size_t deepest_row_;
};

/// Data contradicts the degree it was fitted at, or a fit failed verification.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A self-check that must always hold did not. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Vandermonde system with repeated abscissae.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Network fetch failed.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// No bundled fixture for the requested sequence.
class FixtureMissingError : public Error {
 public:
  using Error::Error;
};

}  // namespace worpitzky

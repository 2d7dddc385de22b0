#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class RadicandMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotTranscendental : public Error {
 public:
  NotTranscendental() : Error("exponential polynomial is not transcendental") {}
  using Error::Error;
};

class OrderTooHigh : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class NotSimple : public Error {
 public:
  NotSimple() : Error("exponential polynomial is not simple") {}
};

class NotASolution : public Error {
 public:
  using Error::Error;
};

class ConstantTermMissing : public Error {
 public:
  using Error::Error;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class LatticeViolation : public Error {
 public:
  using Error::Error;
};

class MultiplierNotPolynomial : public Error {
 public:
  using Error::Error;
};

class CorpusFormatError : public Error {
 public:
  using Error::Error;
};

/// Byte range [start, end) into a parsed string.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, SourceSpan span)
      : Error(what + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
        span_(span) {}

  [[nodiscard]] SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace expoly

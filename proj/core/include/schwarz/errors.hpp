#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite data, mismatched lengths, invalid parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The weighted support has no direction orthogonal to y (witness needs one).
class InsufficientDimension : public Error {
 public:
  using Error::Error;
};

/// a == A: the admissible disk has radius zero, no witness exists.
class DegenerateDisk : public Error {
 public:
  using Error::Error;
};

/// Some ratio x_i/y_i is unbounded (y_i = 0, x_i != 0 on the support).
class NoFiniteBounds : public Error {
 public:
  using Error::Error;
};

/// No index carries positive weight, or no ratio point exists.
class EmptySupport : public Error {
 public:
  using Error::Error;
};

/// A(h) <= 0: the h-weighted functional cannot be normalized.
class DegenerateWeight : public Error {
 public:
  using Error::Error;
};

/// The requested inequality family is stated for unit weights only.
class UnsupportedWeights : public Error {
 public:
  using Error::Error;
};

/// Dataset ingestion failure. line() is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace schwarz

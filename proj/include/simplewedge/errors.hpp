#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swedge {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate geometric requests (identical points, coincident lines).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A point sequence that is not an interesting set.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class NotThreeBounded : public Error {
 public:
  using Error::Error;
};

// An orbit step revisited a point other than x_1.  Impossible on
// 3-bounded configurations.
class OrbitAnomaly : public Error {
 public:
  using Error::Error;
};

// A proven statement failed on concrete input.  Always an internal bug
// (or a counterexample to a theorem), never a user error.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error("parse error line " + std::to_string(line) +
              (detail.empty() ? "" : ": " + detail)),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace swedge

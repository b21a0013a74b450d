#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ish {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Image file cannot be read or parsed.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// File parsed but uses a feature outside the supported set.
class UnsupportedFormatError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};

// An argument violates an operation precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Corner detection produced an empty set.
class NoCornersError : public Error {
 public:
  using Error::Error;
};

// Graph construction needs at least two nodes and a positive diameter.
class DegenerateGraphError : public Error {
 public:
  using Error::Error;
};

// Internal contract broken (dimension mismatch, asymmetric input, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Spectrum interpolation needs at least two distinct abscissae.
class UndefinedDistanceError : public Error {
 public:
  using Error::Error;
};

// Hash pipeline failure carrying the stage that failed.
class HashFailure : public Error {
 public:
  HashFailure(std::string stage, const std::string& what)
      : Error("hash failure at stage '" + stage + "': " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Evaluation harness misuse (missing class, corpus too small, ...).
class HarnessError : public Error {
 public:
  using Error::Error;
};

// Transform output would exceed the canvas limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Hash file malformed or of an unsupported version.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ish

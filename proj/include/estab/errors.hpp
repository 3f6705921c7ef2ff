#pragma once

#include <stdexcept>
#include <string>

namespace estab {

// Root of every error thrown by the library. Subclasses identify the failure
// class; the message carries the details.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidBand : public Error {
 public:
  using Error::Error;
};

class IncompleteSpectrum : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MissingField : public ParseError {
 public:
  using ParseError::ParseError;
};

class FileError : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class NonFiniteSample : public QuadratureFailure {
 public:
  using QuadratureFailure::QuadratureFailure;
};

class StepTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace estab

#pragma once

#include <stdexcept>
#include <string>

namespace paracr {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalar arithmetic left its domain (division by ~0, log of a non-positive
/// value, ...). Samplers treat it as "reject this point".
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularFrame : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateMetric : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutsidePatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

class RankDefect : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class InconsistentVerdict : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace paracr

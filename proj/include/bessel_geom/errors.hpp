#pragma once

#include <stdexcept>

namespace bessel_geom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Pochhammer denominator (q)_k vanished: q is zero or a negative integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series failed to meet its truncation criterion within the term cap.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A quotient denominator fell below the degeneracy guard.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A beta = 1 specialization was requested with beta != 1.
class BetaMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation exactly at a figure function's essential singularity.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No sign change was found in a root-search window.
class NoBracket : public Error {
 public:
  using Error::Error;
};

}  // namespace bessel_geom

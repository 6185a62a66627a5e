#ifndef SYMJAC_ERRORS_HPP
#define SYMJAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symjac {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (|x| > 1, p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Pointwise evaluation at theta = 0 where the function is unbounded.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A grid does not have the structure an operation needs (e.g. mirror symmetry).
class GridError : public Error {
 public:
  using Error::Error;
};

/// Requested truncation cannot be resolved by the supplied quadrature.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// The exponent p lies outside E(alpha, beta), or a similar admissibility rule fails.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for these parameters (Riesz potentials with alpha + beta = -1).
class UnsupportedParametersError : public Error {
 public:
  using Error::Error;
};

/// Invalid square function specification (requires 0 < gamma < k).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Ensemble produced no usable members.
class EnsembleError : public Error {
 public:
  using Error::Error;
};

}  // namespace symjac

#endif  // SYMJAC_ERRORS_HPP

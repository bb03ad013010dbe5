#pragma once

#include <stdexcept>
#include <string>

namespace qcompass {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-domain or non-finite input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A q-product or prefactor vanishes (q -> 1, base root, zero denominator).
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// The normalization braces are not a positive real number.
class DegenerateNormalization : public Error {
 public:
  using Error::Error;
};

/// The integrand has not decayed at the edge of the quadrature window.
class QuadratureWindowError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real carries an imaginary residue above its gate.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcompass

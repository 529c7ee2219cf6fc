#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLabel : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A stability parameter lies on a wall (zero pairing with some root).
class NonGenericParameter : public Error {
 public:
  using Error::Error;
};

/// A straight path between parameters touches a wall at an endpoint or
/// crosses two walls at the same time.
class NonGenericPath : public Error {
 public:
  using Error::Error;
};

class ImaginaryWall : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class SubstitutionDomainError : public Error {
 public:
  using Error::Error;
};

/// Requested coefficient lies beyond the truncation order.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ConstantTermError : public Error {
 public:
  using Error::Error;
};

}  // namespace mckay

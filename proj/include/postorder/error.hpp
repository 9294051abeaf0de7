#pragma once

#include <stdexcept>
#include <string>

namespace postorder {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input object violates one of its invariants (negative effect entry,
/// incomplete EVM, non-Hermitian matrix, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Operands have incompatible shapes or live on different spaces.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A search gave up at a caller-supplied bound.
class BoundExceeded : public Error {
public:
  BoundExceeded(const std::string& what, int bound) : Error(what), bound_(bound) {}
  int bound() const { return bound_; }

private:
  int bound_;
};

/// A certificate produced internally failed re-verification. Indicates a
/// bug, never a property of the input.
class CertificateError : public Error {
public:
  explicit CertificateError(const std::string& what) : Error(what) {}
};

}  // namespace postorder

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wfs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition or copairing of morphisms whose boundaries do not match.
class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

/// A search space exceeded the configured cap; the caller must shrink the universe.
class HomSetTooLarge : public Error {
 public:
  HomSetTooLarge(std::uint64_t count, const std::string& what)
      : Error("hom-set too large (" + std::to_string(count) + "): " + what), count_(count) {}
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

/// An object whose elements can no longer be indexed by a 64-bit integer.
class ObjectTooLarge : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedCategory : public Error {
 public:
  using Error::Error;
};

class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class NonCommutingSquare : public Error {
 public:
  using Error::Error;
};

class NotAnLMap : public Error {
 public:
  using Error::Error;
};

/// Malformed payload: a table that is not equivariant, a matrix entry violating
/// the divisibility constraint, a non-associative monoid table, ...
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside a runner's precondition (universe too small, check
/// too expensive without --deep, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace wfs

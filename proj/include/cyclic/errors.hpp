#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Window length outside [1, n].
class InvalidWindowError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the requested function. When the
/// failure is tied to a vector position, `index()` is the 1-based index.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::int64_t index = 0)
      : Error(what), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

/// Vector length incompatible with the operation (e.g. n not divisible by k).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// k <= 1: the tangent construction degenerates (g_1 is e^{-x} itself).
class DegenerateFamilyError : public Error {
 public:
  using Error::Error;
};

/// Root scan found no sign change, or more than one.
class NoBracketError : public Error {
 public:
  using Error::Error;
};

/// A resource cap would be exceeded; `required()` reports what was needed.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, double required)
      : Error(what), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclic

#pragma once

#include <stdexcept>
#include <string>

namespace tsurf {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is malformed (bad indices, missing fields); distinct from geometric failure.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (non-positive scale, odd polygon size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Spec is well formed but does not describe a translation surface.
class InvalidSurfaceError : public Error {
 public:
  using Error::Error;
};

/// A cone angle is not a multiple of 2π.
class InconsistentSurfaceError : public Error {
 public:
  using Error::Error;
};

/// Two routes to the same invariant disagree. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Development of a circle exceeded its piece budget.
class RadiusTooLargeError : public Error {
 public:
  using Error::Error;
};

/// A circle overlaps itself on the surface.
class InadmissibleCircleError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsurf

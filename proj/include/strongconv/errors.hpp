#pragma once

#include <stdexcept>
#include <string>

namespace strongconv {

/// Malformed or inconsistent input (dimension mismatch, bad JSON, unbounded body).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured cap.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold for the given data.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// The point set is not contained in any translate of the body, so its
/// strongly convex hull is undefined.
class NotCoverableError : public PreconditionError {
 public:
  explicit NotCoverableError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace strongconv

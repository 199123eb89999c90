#pragma once

#include <stdexcept>
#include <string>

namespace parwall {

/// Rejected problem instance: rank/degree/genus/multiplicity outside the
/// supported configurations.
struct SetupError : std::runtime_error {
  explicit SetupError(const std::string& what) : std::runtime_error(what) {}
};

/// Input value outside an operation's domain (e.g. a weight outside the cube).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A weight sits on a wall where a generic one was required.
struct GenericityError : std::runtime_error {
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// A flip path runs through a wall intersection; the caller owns perturbation.
struct DegeneratePathError : std::runtime_error {
  explicit DegeneratePathError(const std::string& what) : std::runtime_error(what) {}
};

/// Cone operations require pointed cones.
struct ConeError : std::runtime_error {
  explicit ConeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parwall

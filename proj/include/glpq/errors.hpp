#pragma once

#include <stdexcept>
#include <string>

namespace glpq {

/// Malformed or inconsistent user input: unreadable algebra files, structure
/// constants violating antisymmetry/Jacobi, out-of-range parameters.
/// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A fixed spectral band cannot deliver the requested quantity within the
/// guaranteed relative accuracy.  The CLI maps this to exit code 2.
class TruncationInsufficient : public std::runtime_error {
public:
  explicit TruncationInsufficient(const std::string& msg) : std::runtime_error(msg) {}
};

/// An adaptive computation hit its hard size cap before converging.
/// The CLI maps this to exit code 2.
class ResourceLimit : public std::runtime_error {
public:
  explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

/// The requested generating set does not bracket-generate the algebra, so no
/// stratification (and no homogeneous dimension) exists.  Exit code 1.
class NotHoermander : public std::runtime_error {
public:
  explicit NotHoermander(const std::string& msg) : std::runtime_error(msg) {}
};

/// A file could not be read or written.  The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace glpq

#pragma once

#include <stdexcept>
#include <string>

namespace meshcore {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An index or topological dimension is outside its valid range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// A value passed to an operation is invalid (counts, arities, kinds).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// An operation was invoked in the wrong state (protocol order, missing
/// prerequisite connectivity, stale cursor).
class StateError : public Error {
public:
  using Error::Error;
};

/// A mesh or mesh-function file could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A distributed-mesh partition is invalid (non-manifold sharing, or the
/// post-hoc dof numbering validation failed).
class PartitionError : public Error {
public:
  using Error::Error;
};

} // namespace meshcore

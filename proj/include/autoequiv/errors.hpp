#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace autoequiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A signature names a sort index the domain does not have.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Two permutations, groups or models live on incompatible domains.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration ran past its configured limit.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t nodes_visited = 0)
      : Error(what), nodes_visited_(nodes_visited) {}

  std::uint64_t nodes_visited() const { return nodes_visited_; }

 private:
  std::uint64_t nodes_visited_;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input does not have the structural shape an operation requires
/// (e.g. a graph operation applied to a model with a ternary relation).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input failed model validation; the message lists the first violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (permutation specs, witness files, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace autoequiv

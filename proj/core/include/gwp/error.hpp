#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwp {

/// Base of every exception thrown by gwpkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown symbol, duplicate generator name, or a malformed alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Text input (words, rule files, graph dumps, vf specs) that does not parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Data handed to a factory does not describe a valid object.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A normal-form oracle was observed to be inconsistent.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A rewriting system or automaton could not be assembled.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates corrupted input machines.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// One of the graphs passed to a ball comparison is not known out to the
/// requested radius.
class InsufficientRadiusError : public Error {
 public:
  using Error::Error;
};

/// A bounded oracle was asked about an element outside its radius.
class RadiusExceededError : public Error {
 public:
  using Error::Error;
};

/// An exploration exceeded its vertex budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t achieved_radius)
      : Error(what), achieved_radius_(achieved_radius) {}

  /// Largest radius that was fully explored before the budget ran out.
  std::size_t achieved_radius() const noexcept { return achieved_radius_; }

 private:
  std::size_t achieved_radius_;
};

}  // namespace gwp

#pragma once

#include <stdexcept>
#include <string>

namespace ndlt {

/// Manifest or text input could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Payload does not match what the manifest declares.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical precondition failed, e.g. a quadrature rule that is not exact
/// enough for the band it is asked to sample.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Physically degenerate input geometry (an atom on the sampling sphere).
class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ndlt

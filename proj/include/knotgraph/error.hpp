#pragma once

#include <stdexcept>
#include <string>

namespace knotgraph {

/// Base class for every error raised by the library.
class KnotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported diagram notation.
class ParseError : public KnotError {
 public:
  using KnotError::KnotError;
};

/// A move site that does not belong to, or no longer applies to, a diagram.
class MoveError : public KnotError {
 public:
  using KnotError::KnotError;
};

/// A graph that is not in the image of the encoder.
class ReconstructionError : public KnotError {
 public:
  using KnotError::KnotError;
};

class DatasetError : public KnotError {
 public:
  using KnotError::KnotError;
};

}  // namespace knotgraph

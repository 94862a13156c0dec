#pragma once

#include <stdexcept>
#include <string>

namespace sst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilitySymbol : public Error {
 public:
  using Error::Error;
};

/// Thrown when a class table would hold more compositions than the
/// configured cap allows.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A received string lies outside the shaped set. This is the detection
/// signal used by the testability harness.
class NotInShapedSet : public Error {
 public:
  using Error::Error;
};

class MalformedBitstream : public Error {
 public:
  using Error::Error;
};

}  // namespace sst

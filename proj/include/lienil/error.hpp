#pragma once

#include <stdexcept>
#include <string>

namespace lienil {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed expressions, non-prime characteristic, bad files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what)
      : Error("too large for brute force: " + what) {}
};

// Operands belong to different fields or algebras.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace lienil

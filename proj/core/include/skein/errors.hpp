#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

// Math-domain failures map to CLI exit code 1, usage failures to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class StrandMismatch : public Error {
 public:
  using Error::Error;
};

class ShrinkNotAllowed : public Error {
 public:
  using Error::Error;
};

class TermCapExceeded : public Error {
 public:
  using Error::Error;
};

class DepthCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class GrammarViolation : public Error {
 public:
  using Error::Error;
};

class NotAGap : public Error {
 public:
  using Error::Error;
};

class NotStabilizable : public Error {
 public:
  using Error::Error;
};

class NotTriangular : public Error {
 public:
  using Error::Error;
};

class ReplayMismatch : public Error {
 public:
  using Error::Error;
};

// Parser diagnostics carry the byte offset of the failure.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what), offset(offset) {}
  std::size_t offset;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace skein

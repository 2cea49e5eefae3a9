#pragma once

#include <stdexcept>
#include <string>

namespace lieord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad n, non-prime p, wrong gamma, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Input exceeds the desk-scale size guarantee (factorization, enumeration).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class E8WithoutTable : public Error {
 public:
  using Error::Error;
};

/// An invariant of an E8 factor cannot be derived from degrees alone.
class Unresolvable : public Error {
 public:
  using Error::Error;
};

class NotAWeylFamily : public Error {
 public:
  using Error::Error;
};

class AmbiguousBlock : public Error {
 public:
  using Error::Error;
};

class NotCoincident : public Error {
 public:
  using Error::Error;
};

class NoPeelingElement : public Error {
 public:
  using Error::Error;
};

class CacheInvalid : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace lieord

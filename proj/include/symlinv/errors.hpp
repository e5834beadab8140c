#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symlinv {

// Every error the library raises derives from Error so callers (the CLI in
// particular) can separate library failures from everything else.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class RangeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "range"; }
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension_mismatch"; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

class UnsupportedInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported_input"; }
};

class InversionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "inversion"; }
};

class DivisionByZero : public Error {
 public:
  DivisionByZero(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  const char* kind() const noexcept override { return "division_by_zero"; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Raised when the weight-direction denominator of an L-invariant vanishes.
class SingularDirectionError : public Error {
 public:
  SingularDirectionError(const std::string& what, std::size_t place)
      : Error(what), place_(place) {}
  const char* kind() const noexcept override { return "singular_direction"; }
  std::size_t place() const noexcept { return place_; }

 private:
  std::size_t place_;
};

// Signals a bug: a mathematical fact the code relies on did not hold.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_consistency"; }
};

}  // namespace symlinv

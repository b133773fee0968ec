#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hornkc {

// Root of every error the library raises. The CLI maps the subclasses onto
// its exit-code table; anything else reaching main is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WidthMismatch : public Error {
 public:
  WidthMismatch(int expected, int actual, std::string_view where);
};

// intersect() of an empty set; the empty intersection is left undefined.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

// Bad argument value: index out of range, inconsistent term, etc.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation needs an exhaustive sweep over 2^width assignments and the
// width exceeds the configured limit.
class GuardExceeded : public Error {
 public:
  GuardExceeded(int width, int limit, std::string_view where);
};

// Input violates an operation precondition, e.g. a CMI model set that
// contains a non-model of the Horn expression.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Brute-force width guard. Default 24; the CLI reads HORNKC_GUARD.
int brute_force_limit();
void set_brute_force_limit(int width);
void require_within_guard(int width, std::string_view where);

}  // namespace hornkc

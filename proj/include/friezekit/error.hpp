#pragma once

#include <stdexcept>
#include <string>

namespace friezekit {

enum class ErrorKind {
  invalid_input,
  degenerate_input,
  validation_failed,
  frozen_vertex,
  not_mutable,
  ambiguous,
  internal_inconsistency,
  saturation_stalled,
  non_integral,
  guard_exceeded,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace friezekit

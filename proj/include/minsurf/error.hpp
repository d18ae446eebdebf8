#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

// Error categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
  usage = 1,         // bad config / bad arguments
  not_timelike = 2,  // radicand 1 - phi_t^2 + phi_x^2 not positive
  solver = 3,        // blow-up guard, CFL violation, Picard failure
  reconstruction = 4,
  verification = 5,
  invalid_input = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const {
    int c = static_cast<int>(kind_);
    return c > 5 ? 1 : c;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace minsurf

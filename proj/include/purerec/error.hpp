#pragma once

#include <stdexcept>
#include <string>

namespace purerec {

// Broad classes of failure; the CLI maps these to exit codes.
enum class ErrorKind {
  Usage,          // malformed input, violated precondition
  Singular,       // FAIL: every evaluation path divides by zero
  Inconsistent,   // exact checks disagree (bad guess, corrupted data)
  NotFound,       // search envelope exhausted
  Internal,
};

// All library errors carry a short stable code ("zero-denominator",
// "table-too-small", ...) in addition to the human readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error usage_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Usage, std::move(code), message);
}

}  // namespace purerec

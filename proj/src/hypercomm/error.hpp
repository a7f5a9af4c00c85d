#pragma once

#include <stdexcept>
#include <string>

namespace hypercomm {

enum class Status {
  ok = 0,
  invalid_argument,
  parse_error,
  empty_network,
  overflow,
  numeric_failure,
  io_error,
  internal,
};

// All recoverable failures inside the core are reported as Error; the C API
// boundary maps Status to integer codes.
class Error : public std::runtime_error {
 public:
  Error(Status status, std::string message)
      : std::runtime_error(std::move(message)), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

inline void require(bool cond, Status status, const std::string& message) {
  if (!cond) fail(status, message);
}

}  // namespace hypercomm

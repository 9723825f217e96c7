#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpkit {

enum class ErrorKind {
  MalformedToken,
  IndexOutOfRange,
  GroupMismatch,
  EmptyRelator,
  RankMismatch,
  NotNegativeDefinite,
  ZeroClass,
  NotStein,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type; the
// CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qpkit

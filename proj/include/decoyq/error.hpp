#pragma once

#include <stdexcept>
#include <string>

namespace decoyq {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kNoClosedForm = 3,
  kNoCrossover = 4,
  kNumerical = 5,
};

// Every failure in the core is reported through this exception; the C layer
// translates the code into a dq_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace decoyq

#pragma once

#include <stdexcept>
#include <string>

namespace rtop {

enum class ErrorCode {
  kImproper,           // parametrization is not proper
  kRepairFailed,       // no transform made the hypotheses hold
  kPrecisionExhausted, // digits would exceed the configured maximum
  kParse,              // malformed input document
  kDegenerateSystem,   // elimination produced a positive-dimensional set
  kMatchingFailure,    // an edge could not be matched (retried at higher precision)
  kInvalidArgument,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rtop

#pragma once

#include <stdexcept>
#include <string>

namespace pizza {

// Machine-readable failure categories. The CLI prints code_name() verbatim.
enum class ErrorCode {
  InvalidArgument,
  PrecisionExhausted,
  DepthLimitExceeded,
  DenominatorVanishes,
  NotContinuousGerm,
  NonVanishingAtOrigin,
  PositivityUnverifiable,
  UnsupportedExpression,
  SectorMismatch,
  InvalidPizza,
  NotApplicable,
  InvalidSlice,
  OrderMismatch,
  AllSamplesZero,
  OutsideAllSectors,
  ParseError,
  IOError,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pizza

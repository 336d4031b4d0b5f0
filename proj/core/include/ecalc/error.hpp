#pragma once

#include <stdexcept>
#include <string>

namespace ecalc {

enum class ErrorCode {
  InvalidInput,
  NotFiniteType,
  LabelInconsistency,
  UnknownRoot,
  UnsupportedGroup,
  IotaMismatch,
  IndeterminateZeroRegion,
  DegenerateArgument,
  NeedsHigherLogOrder,
  HyperplaneDegeneracy,
  UnmodeledPoint,
};

// Stable kebab-case identifier, e.g. "indeterminate-zero-region".
const char* error_code_name(ErrorCode code);

class CalcError : public std::runtime_error {
 public:
  CalcError(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ecalc

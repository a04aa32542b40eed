#pragma once

#include <stdexcept>
#include <string>

namespace kmcat {

enum class ErrorCode {
  NotGCM,
  NotSymmetrizable,
  AnchorMismatch,
  NotFiniteType,
  SizeMismatch,
  ParamMismatch,
  ParamsNotHomogeneous,
  InternalInconsistency,
  CapExceeded,
  NotDominant,
  NonSplit,
  DatumMismatch,
  IncompleteDepth,
  InvalidArgument,
  Config,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kmcat

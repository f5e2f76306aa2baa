#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmp {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidSubset,
  kNotHermitian,
  kInvalidSpectrum,
  kNotPositive,
  kInvalidArgument,
  kSumMismatch,
  kSizeMismatch,
  kRankMismatch,
  kUnknownDescriptor,
  kUnknownFamily,
  kIncompatibleSystems,
  kWallOfCubicle,
  kZeroCoefficient,
  kUnsupported,
  kCapExceeded,
  kInfeasible,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

/// Library-wide exception. The code is stable and surfaces in CLI error records.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kInvalidSubset: return "invalid-subset";
    case ErrorCode::kNotHermitian: return "non-hermitian";
    case ErrorCode::kInvalidSpectrum: return "invalid-spectrum";
    case ErrorCode::kNotPositive: return "non-psd";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kSumMismatch: return "sum-mismatch";
    case ErrorCode::kSizeMismatch: return "size-mismatch";
    case ErrorCode::kRankMismatch: return "rank-mismatch";
    case ErrorCode::kUnknownDescriptor: return "unknown-descriptor";
    case ErrorCode::kUnknownFamily: return "unknown-family";
    case ErrorCode::kIncompatibleSystems: return "incompatible-systems";
    case ErrorCode::kWallOfCubicle: return "wall-of-cubicle";
    case ErrorCode::kZeroCoefficient: return "zero-coefficient";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kCapExceeded: return "cap-exceeded";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qmp
